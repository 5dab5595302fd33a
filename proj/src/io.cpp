#include "pauliops/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pauliops {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

// %.10g, with a trailing ".0" on integral values so dumps read like the
// float literals they stand for.
std::string format_float10(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  std::string s = buf;
  if (s.find_first_of(".einf") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

std::string format_coeff(Coeff c) {
  return "(" + format_float10(c.real()) + (c.imag() < 0 ? " - " : " + ") +
         format_float10(std::abs(c.imag())) + "im)";
}

std::vector<LabeledTerm> labeled_terms(const Operator& a) {
  std::vector<LabeledTerm> out;
  out.reserve(a.size());
  for (const auto& [t, h] : a.terms())
    out.push_back({to_label(t, a.n_sites()), h * display_factor(t)});
  std::sort(out.begin(), out.end(), [](const LabeledTerm& x, const LabeledTerm& y) {
    const double mx = std::norm(x.coeff), my = std::norm(y.coeff);
    if (mx != my) return mx > my;
    return x.label < y.label;
  });
  return out;
}

std::string to_string(const Operator& a) {
  std::string s;
  for (const auto& lt : labeled_terms(a)) {
    s += format_coeff(lt.coeff);
    s += ' ';
    s += lt.label;
    s += '\n';
  }
  return s;
}

namespace {

std::vector<LabeledTerm> sorted_by_label(const Operator& a) {
  std::vector<LabeledTerm> out;
  out.reserve(a.size());
  for (const auto& [t, h] : a.terms())
    out.push_back({to_label(t, a.n_sites()), h * display_factor(t)});
  std::sort(out.begin(), out.end(),
            [](const LabeledTerm& x, const LabeledTerm& y) { return x.label < y.label; });
  return out;
}

void save_text_impl(std::ostream& os, const Operator& a, bool ts) {
  os << "pauliop N=" << a.n_sites() << " ts=" << (ts ? 1 : 0) << '\n';
  for (const auto& lt : sorted_by_label(a))
    os << lt.label << ' ' << format_double(lt.coeff.real()) << ' '
       << format_double(lt.coeff.imag()) << '\n';
}

Operator operator_from_entries(int n, const std::vector<LabeledTerm>& entries) {
  Operator a(n);
  for (const auto& e : entries) {
    if (e.label.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("label '" + e.label + "' does not match N=" + std::to_string(n));
    const auto t = from_label<Word64>(e.label);
    a.accumulate(t, e.coeff * storage_factor(t));
  }
  a.compress();
  return a;
}

}  // namespace

void save_text(std::ostream& os, const Operator& a) { save_text_impl(os, a, false); }
void save_text(std::ostream& os, const SymOperator1D& a) { save_text_impl(os, a.rep(), true); }

void save_text_file(const std::string& path, const Operator& a) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  save_text(os, a);
}

LoadedOperator load_text(std::istream& is) {
  std::string header;
  if (!std::getline(is, header)) throw std::invalid_argument("empty operator file");
  int n = 0, ts = 0;
  if (std::sscanf(header.c_str(), "pauliop N=%d ts=%d", &n, &ts) != 2)
    throw std::invalid_argument("bad operator header: " + header);
  std::vector<LabeledTerm> entries;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    LabeledTerm e;
    double re = 0.0, im = 0.0;
    if (!(ls >> e.label >> re >> im)) throw std::invalid_argument("bad term line: " + line);
    e.coeff = {re, im};
    entries.push_back(std::move(e));
  }
  return {operator_from_entries(n, entries), ts != 0};
}

LoadedOperator load_text_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return load_text(is);
}

namespace {

std::string to_json_impl(const Operator& a, bool ts) {
  nlohmann::json j;
  j["N"] = a.n_sites();
  j["ts"] = ts;
  auto& terms = j["terms"] = nlohmann::json::array();
  for (const auto& lt : sorted_by_label(a))
    terms.push_back({{"s", lt.label}, {"re", lt.coeff.real()}, {"im", lt.coeff.imag()}});
  return j.dump();
}

}  // namespace

std::string to_json(const Operator& a) { return to_json_impl(a, false); }
std::string to_json(const SymOperator1D& a) { return to_json_impl(a.rep(), true); }

LoadedOperator from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int n = j.at("N").get<int>();
  std::vector<LabeledTerm> entries;
  for (const auto& item : j.at("terms"))
    entries.push_back(
        {item.at("s").get<std::string>(), {item.at("re").get<double>(), item.at("im").get<double>()}});
  return {operator_from_entries(n, entries), j.value("ts", false)};
}

}  // namespace pauliops
