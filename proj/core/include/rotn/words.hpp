#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rotn {

/// An immutable word over {+1, -1} stored as a hash-consed DAG.
///
/// Each node carries its length, total, and the maximum and minimum over
/// nonempty prefix sums, computed once from its children. Words of length
/// far beyond 2^64 are cheap as long as the DAG stays small.
///
/// Structurally identical constructions return the same node, so equality
/// of handles is node identity. Two different DAGs may spell the same word.
class SignWord {
 public:
  enum class Kind { empty, atom, concat, power };

  struct Node;

  /// Default-constructed words are empty.
  SignWord();

  static SignWord empty();
  static SignWord atom(int sign);
  /// Concatenation; an empty operand is absorbed.
  static SignWord concat(const SignWord& a, const SignWord& b);
  /// a repeated `exponent` times; exponent 0 is rejected (use empty()).
  static SignWord power(const SignWord& a, std::uint64_t exponent);

  Kind kind() const;
  bool is_empty() const { return kind() == Kind::empty; }
  int atom_sign() const;
  SignWord left() const;   // concat only
  SignWord right() const;  // concat only
  SignWord base() const;   // power only
  std::uint64_t exponent() const;

  const mpz_class& length() const;
  const mpz_class& total() const;
  /// Extrema over prefixes of length >= 1; DomainError on the empty word.
  const mpz_class& max_prefix() const;
  const mpz_class& min_prefix() const;

  /// Nested debug text, e.g. "(+ (-^3) (+^2))".
  std::string str() const;

  friend bool operator==(const SignWord& a, const SignWord& b) { return a.node_ == b.node_; }

 private:
  explicit SignWord(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

SignWord concat_all(std::initializer_list<SignWord> parts);

/// Explicit letters; refuses words longer than `cap`.
std::vector<int> expand(const SignWord& w, std::uint64_t cap);

/// Streams the first min(limit, length) letters; stops early if `visit`
/// returns false. Returns the number of letters visited.
std::uint64_t for_each_letter(const SignWord& w, std::uint64_t limit, const std::function<bool(int)>& visit);

/// The k-th prefix sum, 1 <= k <= length, in O(DAG depth).
mpz_class prefix_sum_at(const SignWord& w, const mpz_class& k);

/// The k-th letter, 1 <= k <= length.
int letter_at(const SignWord& w, const mpz_class& k);

/// Number of distinct live nodes in the interning table.
std::size_t interned_node_count();

}  // namespace rotn
