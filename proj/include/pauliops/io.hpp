#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pauliops/operator.hpp"
#include "pauliops/symmetric.hpp"

namespace pauliops {

// Round-trip-exact decimal form of a double (%.17g).
std::string format_double(double x);

// "(re + imim)" with 10 significant digits, the form used by the step dumps.
std::string format_coeff(Coeff c);

// One displayable term: label plus Pauli-letter coefficient.
struct LabeledTerm {
  std::string label;
  Coeff coeff;
};

// Terms in display space, largest |coefficient| first, ties by label.
std::vector<LabeledTerm> labeled_terms(const Operator& a);

// Multi-line "(re + imim) LABEL" rendering.
std::string to_string(const Operator& a);

// Text format: header "pauliop N=<n> ts=<0|1>", then one "<label> <re> <im>"
// line per term with Pauli-letter coefficients. Terms are sorted by label so
// identical operators serialize identically.
void save_text(std::ostream& os, const Operator& a);
void save_text(std::ostream& os, const SymOperator1D& a);
void save_text_file(const std::string& path, const Operator& a);

struct LoadedOperator {
  Operator op;                // full operator, or the representative if ts
  bool translation_symmetric = false;
};

LoadedOperator load_text(std::istream& is);
LoadedOperator load_text_file(const std::string& path);

// JSON format: {"N": n, "ts": bool, "terms": [{"s": label, "re": x, "im": y}]}.
std::string to_json(const Operator& a);
std::string to_json(const SymOperator1D& a);
LoadedOperator from_json(const std::string& text);

}  // namespace pauliops
