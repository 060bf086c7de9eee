// Copyright 2026 The abka Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ABKA_POLICY_HPP
#define ABKA_POLICY_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "abka/errors.hpp"
#include "abka/scalar.hpp"

namespace abka {

// Deduplicated, sorted set of attribute names. Sorting fixes a canonical
// order for serialization and for aligning per-attribute key components.
class AttributeSet {
 public:
  AttributeSet() = default;

  explicit AttributeSet(std::vector<std::string> attrs) {
    std::sort(attrs.begin(), attrs.end());
    attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
    for (const auto& a : attrs) {
      if (a.empty()) throw UsageError("attribute name must be non-empty");
    }
    attrs_ = std::move(attrs);
  }

  const std::vector<std::string>& names() const { return attrs_; }
  std::size_t size() const { return attrs_.size(); }
  bool empty() const { return attrs_.empty(); }

  bool contains(const std::string& name) const {
    return std::binary_search(attrs_.begin(), attrs_.end(), name);
  }

  // Index of `name` in sorted order, or nullopt.
  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::lower_bound(attrs_.begin(), attrs_.end(), name);
    if (it == attrs_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - attrs_.begin());
  }

  bool operator==(const AttributeSet&) const = default;

 private:
  std::vector<std::string> attrs_;
};

// Monotone Boolean formula over attributes: leaves and AND/OR gates.
// Immutable, value-semantic; subtrees are shared on copy.
class PolicyFormula {
 public:
  enum class Kind { attribute, and_gate, or_gate };

  struct Node {
    Kind kind;
    std::string attribute;  // leaves only
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  static PolicyFormula attribute(std::string name) {
    if (name.empty()) throw UsageError("attribute name must be non-empty");
    auto n = std::make_shared<Node>();
    n->kind = Kind::attribute;
    n->attribute = std::move(name);
    return PolicyFormula(std::move(n));
  }

  static PolicyFormula and_gate(PolicyFormula l, PolicyFormula r) {
    return gate(Kind::and_gate, std::move(l), std::move(r));
  }

  static PolicyFormula or_gate(PolicyFormula l, PolicyFormula r) {
    return gate(Kind::or_gate, std::move(l), std::move(r));
  }

  const Node& root() const { return *root_; }

  bool operator==(const PolicyFormula& other) const {
    return equal(root_.get(), other.root_.get());
  }

  // Leaf attribute names in left-to-right order, duplicates preserved.
  std::vector<std::string> leaves() const {
    std::vector<std::string> out;
    collect_leaves(root_.get(), out);
    return out;
  }

  std::size_t leaf_count() const { return leaves().size(); }

  // Distinct attribute names mentioned anywhere in the formula.
  std::set<std::string> attributes() const {
    auto ls = leaves();
    return {ls.begin(), ls.end()};
  }

 private:
  explicit PolicyFormula(std::shared_ptr<const Node> root)
      : root_(std::move(root)) {}

  static PolicyFormula gate(Kind kind, PolicyFormula l, PolicyFormula r) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->left = l.root_;
    n->right = r.root_;
    return PolicyFormula(std::move(n));
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    if (a->kind == Kind::attribute) return a->attribute == b->attribute;
    return equal(a->left.get(), b->left.get()) &&
           equal(a->right.get(), b->right.get());
  }

  static void collect_leaves(const Node* n, std::vector<std::string>& out) {
    if (n->kind == Kind::attribute) {
      out.push_back(n->attribute);
      return;
    }
    collect_leaves(n->left.get(), out);
    collect_leaves(n->right.get(), out);
  }

  std::shared_ptr<const Node> root_;
};

// Grammar:
//   expr   := term (OR term)*
//   term   := factor (AND factor)*
//   factor := ATTR | '(' expr ')'
//   ATTR   := [A-Za-z0-9_:.-]+
// Keywords are case-insensitive; AND binds tighter than OR.
namespace detail {

class PolicyParser {
 public:
  explicit PolicyParser(std::string_view text) : text_(text) {}

  PolicyFormula parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("empty policy", pos_);
    PolicyFormula f = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

 private:
  static bool is_attr_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
           c == ':' || c == '.' || c == '-';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
      ++pos_;
    }
  }

  // Next whole attribute-shaped token, without consuming it.
  std::string peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && is_attr_char(text_[end])) ++end;
    return std::string(text_.substr(pos_, end - pos_));
  }

  static std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
  }

  bool consume_keyword(const char* kw) {
    std::string word = peek_word();
    if (upper(word) == kw) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  PolicyFormula parse_expr() {
    PolicyFormula f = parse_term();
    while (consume_keyword("OR")) {
      f = PolicyFormula::or_gate(std::move(f), parse_term());
    }
    return f;
  }

  PolicyFormula parse_term() {
    PolicyFormula f = parse_factor();
    while (consume_keyword("AND")) {
      f = PolicyFormula::and_gate(std::move(f), parse_factor());
    }
    return f;
  }

  PolicyFormula parse_factor() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("expected attribute or '('", pos_);
    }
    if (text_[pos_] == '(') {
      ++pos_;
      PolicyFormula f = parse_expr();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return f;
    }
    std::string word = peek_word();
    if (word.empty()) {
      throw ParseError("expected attribute or '('", pos_);
    }
    const std::string u = upper(word);
    if (u == "AND" || u == "OR") {
      throw ParseError("keyword in attribute position", pos_);
    }
    if (u == "NOT") {
      throw ParseError("negation is not supported; policies are monotone", pos_);
    }
    pos_ += word.size();
    return PolicyFormula::attribute(std::move(word));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PolicyFormula parse_policy(std::string_view text) {
  return detail::PolicyParser(text).parse();
}

// Canonical text form; parse(to_string(f)) == f.
inline std::string to_string(const PolicyFormula& f) {
  using Kind = PolicyFormula::Kind;
  struct Printer {
    static void print(const PolicyFormula::Node& n, std::string& out) {
      switch (n.kind) {
        case Kind::attribute:
          out += n.attribute;
          break;
        case Kind::and_gate:
          child(*n.left, true, out);
          out += " AND ";
          child(*n.right, true, out);
          break;
        case Kind::or_gate:
          child(*n.left, false, out);
          out += " OR ";
          child(*n.right, false, out);
          break;
      }
    }
    // Parenthesize OR under AND; everything else is unambiguous.
    static void child(const PolicyFormula::Node& n, bool under_and,
                      std::string& out) {
      const bool parens = under_and && n.kind == Kind::or_gate;
      if (parens) out += '(';
      print(n, out);
      if (parens) out += ')';
    }
  };
  std::string out;
  Printer::print(f.root(), out);
  return out;
}

inline bool satisfies(const PolicyFormula& f, const AttributeSet& attrs) {
  using Kind = PolicyFormula::Kind;
  struct Eval {
    static bool run(const PolicyFormula::Node& n, const AttributeSet& attrs) {
      switch (n.kind) {
        case Kind::attribute:
          return attrs.contains(n.attribute);
        case Kind::and_gate:
          return run(*n.left, attrs) && run(*n.right, attrs);
        case Kind::or_gate:
          return run(*n.left, attrs) || run(*n.right, attrs);
      }
      return false;
    }
  };
  return Eval::run(f.root(), attrs);
}

// Share-generating matrix plus per-row attribute labels. Compiled
// matrices have entries in {-1, 0, 1}; deserialized ones may carry any
// residues for the modulus they were encoded under.
struct MspProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> entries;  // row-major, rows*cols
  std::vector<std::string> labels;  // one per row

  const mpz_class& at(std::size_t r, std::size_t c) const {
    return entries[r * cols + c];
  }
  mpz_class& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  bool well_formed() const {
    return rows >= 1 && cols >= 1 && entries.size() == rows * cols &&
           labels.size() == rows;
  }
};

// Matrices compare equal when congruent entry-wise mod p and identically
// labeled.
inline bool msp_equal_mod(const MspProgram& a, const MspProgram& b,
                          const mpz_class& p) {
  if (a.rows != b.rows || a.cols != b.cols || a.labels != b.labels) return false;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (mod(a.entries[i], p) != mod(b.entries[i], p)) return false;
  }
  return true;
}

// Boolean formula to span program. Walks the tree with a shared counter
// c (initially 1, the root vector being (1)): an OR gate passes the
// parent vector to both children; an AND gate gives the left child the
// parent vector zero-padded to length c with 1 appended, the right child
// the zero vector of length c with -1 appended, then increments c. Leaf
// vectors are zero-padded to the final c, in left-to-right leaf order.
inline MspProgram compile_msp(const PolicyFormula& f) {
  using Kind = PolicyFormula::Kind;
  struct LeafRow {
    std::string label;
    std::vector<long> vec;
  };
  struct Walker {
    std::size_t counter = 1;
    std::vector<LeafRow> leaves;

    void walk(const PolicyFormula::Node& n, std::vector<long> vec) {
      switch (n.kind) {
        case Kind::attribute:
          leaves.push_back({n.attribute, std::move(vec)});
          return;
        case Kind::or_gate:
          walk(*n.left, vec);
          walk(*n.right, std::move(vec));
          return;
        case Kind::and_gate: {
          std::vector<long> left_vec = vec;
          left_vec.resize(counter, 0);
          left_vec.push_back(1);
          std::vector<long> right_vec(counter, 0);
          right_vec.push_back(-1);
          ++counter;
          walk(*n.left, std::move(left_vec));
          walk(*n.right, std::move(right_vec));
          return;
        }
      }
    }
  };

  Walker w;
  w.walk(f.root(), {1});

  MspProgram msp;
  msp.rows = w.leaves.size();
  msp.cols = w.counter;
  msp.entries.reserve(msp.rows * msp.cols);
  msp.labels.reserve(msp.rows);
  for (auto& leaf : w.leaves) {
    leaf.vec.resize(msp.cols, 0);
    for (long e : leaf.vec) msp.entries.emplace_back(e);
    msp.labels.push_back(std::move(leaf.label));
  }
  return msp;
}

// Indices I and nonzero coefficients d with sum_{i in I} d_i * M[i]
// congruent to (1, 0, ..., 0) mod p.
struct SatisfyingAssignment {
  std::vector<std::size_t> indices;
  std::vector<Scalar> coefficients;  // parallel to indices, all nonzero
};

// Finds coefficients recombining the rows labeled by owned attributes to
// the target vector (1, 0, ..., 0), or nullopt when the attribute set
// does not satisfy the program. Gaussian elimination over Z_p on the
// transposed subsystem, smallest-index pivots, free variables fixed to
// zero; rows that end up with coefficient zero are dropped.
inline std::optional<SatisfyingAssignment> decode_msp(const MspProgram& msp,
                                                      const AttributeSet& attrs,
                                                      const mpz_class& p) {
  if (!msp.well_formed()) throw UsageError("malformed span program");
  if (p <= 1) throw UsageError("modulus must exceed 1");

  std::vector<std::size_t> owned;  // msp row indices usable by `attrs`
  for (std::size_t r = 0; r < msp.rows; ++r) {
    if (attrs.contains(msp.labels[r])) owned.push_back(r);
  }
  if (owned.empty()) return std::nullopt;

  const std::size_t m = msp.cols;
  const std::size_t k = owned.size();

  // Augmented system A * x = e1 with A = M_owned^T (m x k).
  std::vector<mpz_class> a(m * (k + 1));
  for (std::size_t row = 0; row < m; ++row) {
    for (std::size_t col = 0; col < k; ++col) {
      a[row * (k + 1) + col] = mod(msp.at(owned[col], row), p);
    }
    a[row * (k + 1) + k] = (row == 0) ? 1 : 0;
  }

  auto entry = [&](std::size_t r, std::size_t c) -> mpz_class& {
    return a[r * (k + 1) + c];
  };

  std::vector<std::size_t> pivot_col_of_row(m, SIZE_MAX);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < k && pivot_row < m; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t r = pivot_row; r < m; ++r) {
      if (entry(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel == SIZE_MAX) continue;
    for (std::size_t c = 0; c <= k; ++c) {
      std::swap(entry(sel, c), entry(pivot_row, c));
    }
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), entry(pivot_row, col).get_mpz_t(),
                   p.get_mpz_t()) == 0) {
      throw UsageError("modulus is not prime");
    }
    for (std::size_t c = col; c <= k; ++c) {
      entry(pivot_row, c) = mod(entry(pivot_row, c) * inv, p);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (r == pivot_row || entry(r, col) == 0) continue;
      const mpz_class factor = entry(r, col);
      for (std::size_t c = col; c <= k; ++c) {
        entry(r, c) = mod(entry(r, c) - factor * entry(pivot_row, c), p);
      }
    }
    pivot_col_of_row[pivot_row] = col;
    ++pivot_row;
  }

  // Inconsistent iff a zero row has nonzero right-hand side.
  for (std::size_t r = pivot_row; r < m; ++r) {
    if (entry(r, k) != 0) return std::nullopt;
  }

  std::vector<mpz_class> x(k, 0);
  for (std::size_t r = 0; r < pivot_row; ++r) {
    x[pivot_col_of_row[r]] = entry(r, k);
  }

  SatisfyingAssignment out;
  for (std::size_t col = 0; col < k; ++col) {
    if (x[col] != 0) {
      out.indices.push_back(owned[col]);
      out.coefficients.emplace_back(Scalar(x[col]));
    }
  }
  if (out.indices.empty()) return std::nullopt;  // target was unreachable
  return out;
}

// Roster of users and their attribute sets; handles must be unique.
struct Roster {
  std::vector<std::pair<std::string, AttributeSet>> users;

  void add(std::string handle, AttributeSet attrs) {
    for (const auto& [h, _] : users) {
      if (h == handle) throw UsageError("duplicate roster handle: " + handle);
    }
    users.emplace_back(std::move(handle), std::move(attrs));
  }
};

inline std::size_t count_satisfying(const PolicyFormula& f, const Roster& roster) {
  std::size_t n = 0;
  for (const auto& [_, attrs] : roster.users) {
    if (satisfies(f, attrs)) ++n;
  }
  return n;
}

// Count against a received span program (the client never sees the
// formula, only its MSP).
inline std::size_t count_satisfying(const MspProgram& msp, const Roster& roster,
                                    const mpz_class& p) {
  std::size_t n = 0;
  for (const auto& [_, attrs] : roster.users) {
    if (decode_msp(msp, attrs, p).has_value()) ++n;
  }
  return n;
}

inline bool verify_r_anonymity(const PolicyFormula& f, const Roster& roster,
                               std::size_t r) {
  if (r < 1) throw UsageError("anonymity threshold must be >= 1");
  return count_satisfying(f, roster) >= r;
}

inline bool verify_r_anonymity(const MspProgram& msp, const Roster& roster,
                               std::size_t r, const mpz_class& p) {
  if (r < 1) throw UsageError("anonymity threshold must be >= 1");
  return count_satisfying(msp, roster, p) >= r;
}

// Roster file format: one user per line, `user_id: attr1,attr2`.
// Blank lines and lines starting with '#' are skipped.
inline Roster parse_roster(std::string_view text) {
  Roster roster;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;

    auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    };
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw UsageError("roster line missing ':': " + std::string(line));
    }
    std::string handle(trim(line.substr(0, colon)));
    if (handle.empty()) throw UsageError("roster line with empty user id");

    std::vector<std::string> attrs;
    std::string_view rest = line.substr(colon + 1);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view item =
          comma == std::string_view::npos ? rest : rest.substr(0, comma);
      item = trim(item);
      if (!item.empty()) attrs.emplace_back(item);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    roster.add(std::move(handle), AttributeSet(std::move(attrs)));
  }
  return roster;
}

}  // namespace abka

#endif  // ABKA_POLICY_HPP
