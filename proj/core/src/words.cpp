#include "rotn/words.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "rotn/surd.hpp"

namespace rotn {

struct SignWord::Node {
  Kind kind = Kind::empty;
  int sign = 0;
  std::shared_ptr<const Node> left;  // concat: left, power: base
  std::shared_ptr<const Node> right;
  std::uint64_t exponent = 0;

  mpz_class length;
  mpz_class total;
  mpz_class max_prefix;
  mpz_class min_prefix;
};

namespace {

using Node = SignWord::Node;
using NodePtr = std::shared_ptr<const Node>;

struct NodeKey {
  SignWord::Kind kind;
  int sign;
  const Node* left;
  const Node* right;
  std::uint64_t exponent;

  bool operator==(const NodeKey&) const = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::size_t h = std::hash<const void*>{}(k.left);
    h ^= std::hash<const void*>{}(k.right) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= std::hash<std::uint64_t>{}(k.exponent) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.kind) * 31 + static_cast<std::size_t>(k.sign + 1);
    return h;
  }
};

class InternTable {
 public:
  NodePtr intern(const NodeKey& key, const std::function<Node()>& build) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end()) {
      if (NodePtr live = it->second.lock()) return live;
    }
    auto node = std::make_shared<const Node>(build());
    table_[key] = node;
    if (table_.size() > 2 * purge_mark_) purge();
    return node;
  }

  std::size_t live_count() {
    std::lock_guard<std::mutex> lock(mutex_);
    purge();
    return table_.size();
  }

 private:
  void purge() {
    std::erase_if(table_, [](const auto& entry) { return entry.second.expired(); });
    purge_mark_ = std::max<std::size_t>(1024, table_.size());
  }

  std::mutex mutex_;
  std::unordered_map<NodeKey, std::weak_ptr<const Node>, NodeKeyHash> table_;
  std::size_t purge_mark_ = 1024;
};

InternTable& table() {
  static InternTable instance;
  return instance;
}

const NodePtr& empty_node() {
  static const NodePtr node = [] {
    Node n;
    n.kind = SignWord::Kind::empty;
    n.length = 0;
    n.total = 0;
    return std::make_shared<const Node>(std::move(n));
  }();
  return node;
}

const NodePtr& atom_node(int sign) {
  static const auto make = [](int s) {
    Node n;
    n.kind = SignWord::Kind::atom;
    n.sign = s;
    n.length = 1;
    n.total = s;
    n.max_prefix = s;
    n.min_prefix = s;
    return std::make_shared<const Node>(std::move(n));
  };
  static const NodePtr plus = make(+1);
  static const NodePtr minus = make(-1);
  return sign > 0 ? plus : minus;
}

}  // namespace

SignWord::SignWord() : node_(empty_node()) {}

SignWord SignWord::empty() { return SignWord(empty_node()); }

SignWord SignWord::atom(int sign) {
  if (sign != 1 && sign != -1) throw DomainError("SignWord::atom: sign must be +1 or -1");
  return SignWord(atom_node(sign));
}

SignWord SignWord::concat(const SignWord& a, const SignWord& b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  NodeKey key{Kind::concat, 0, a.node_.get(), b.node_.get(), 0};
  return SignWord(table().intern(key, [&] {
    const Node& l = *a.node_;
    const Node& r = *b.node_;
    Node n;
    n.kind = Kind::concat;
    n.left = a.node_;
    n.right = b.node_;
    n.length = l.length + r.length;
    n.total = l.total + r.total;
    n.max_prefix = l.max_prefix;
    mpz_class shifted_max = l.total + r.max_prefix;
    if (shifted_max > n.max_prefix) n.max_prefix = shifted_max;
    n.min_prefix = l.min_prefix;
    mpz_class shifted_min = l.total + r.min_prefix;
    if (shifted_min < n.min_prefix) n.min_prefix = shifted_min;
    return n;
  }));
}

SignWord SignWord::power(const SignWord& a, std::uint64_t exponent) {
  if (exponent == 0) throw DomainError("SignWord::power: exponent must be >= 1");
  if (a.is_empty()) return a;
  if (exponent == 1) return a;
  NodeKey key{Kind::power, 0, a.node_.get(), nullptr, exponent};
  return SignWord(table().intern(key, [&] {
    const Node& b = *a.node_;
    Node n;
    n.kind = Kind::power;
    n.left = a.node_;
    n.exponent = exponent;
    const mpz_class reps(static_cast<unsigned long>(exponent));
    n.length = b.length * reps;
    n.total = b.total * reps;
    const mpz_class tail = b.total * (reps - 1);
    n.max_prefix = b.max_prefix + (tail > 0 ? tail : mpz_class(0));
    n.min_prefix = b.min_prefix + (tail < 0 ? tail : mpz_class(0));
    return n;
  }));
}

SignWord::Kind SignWord::kind() const { return node_->kind; }

int SignWord::atom_sign() const {
  if (node_->kind != Kind::atom) throw DomainError("SignWord::atom_sign: not an atom");
  return node_->sign;
}

SignWord SignWord::left() const {
  if (node_->kind != Kind::concat) throw DomainError("SignWord::left: not a concatenation");
  return SignWord(node_->left);
}

SignWord SignWord::right() const {
  if (node_->kind != Kind::concat) throw DomainError("SignWord::right: not a concatenation");
  return SignWord(node_->right);
}

SignWord SignWord::base() const {
  if (node_->kind != Kind::power) throw DomainError("SignWord::base: not a power");
  return SignWord(node_->left);
}

std::uint64_t SignWord::exponent() const {
  if (node_->kind != Kind::power) throw DomainError("SignWord::exponent: not a power");
  return node_->exponent;
}

const mpz_class& SignWord::length() const { return node_->length; }
const mpz_class& SignWord::total() const { return node_->total; }

const mpz_class& SignWord::max_prefix() const {
  if (is_empty()) throw DomainError("SignWord::max_prefix: empty word has no prefixes");
  return node_->max_prefix;
}

const mpz_class& SignWord::min_prefix() const {
  if (is_empty()) throw DomainError("SignWord::min_prefix: empty word has no prefixes");
  return node_->min_prefix;
}

namespace {

void append_items(const Node& n, std::vector<std::string>& items);

std::string render(const Node& n) {
  switch (n.kind) {
    case SignWord::Kind::empty:
      return "()";
    case SignWord::Kind::atom:
      return n.sign > 0 ? "+" : "-";
    case SignWord::Kind::power:
      return "(" + render(*n.left) + "^" + std::to_string(n.exponent) + ")";
    case SignWord::Kind::concat: {
      std::vector<std::string> items;
      append_items(n, items);
      std::string out = "(";
      for (std::size_t i = 0; i < items.size(); ++i) out += (i ? " " : "") + items[i];
      return out + ")";
    }
  }
  return {};
}

void append_items(const Node& n, std::vector<std::string>& items) {
  if (n.kind == SignWord::Kind::concat) {
    append_items(*n.left, items);
    append_items(*n.right, items);
  } else {
    items.push_back(render(n));
  }
}

}  // namespace

std::string SignWord::str() const { return render(*node_); }

SignWord concat_all(std::initializer_list<SignWord> parts) {
  SignWord out;
  for (const auto& part : parts) out = SignWord::concat(out, part);
  return out;
}

std::uint64_t for_each_letter(const SignWord& w, std::uint64_t limit, const std::function<bool(int)>& visit) {
  struct Frame {
    SignWord word;
    std::uint64_t remaining;  // repetitions left for power frames
  };
  std::uint64_t emitted = 0;
  std::vector<Frame> stack;
  stack.push_back({w, 1});
  while (!stack.empty() && emitted < limit) {
    Frame& top = stack.back();
    if (top.remaining == 0) {
      stack.pop_back();
      continue;
    }
    --top.remaining;
    const SignWord word = top.word;
    switch (word.kind()) {
      case SignWord::Kind::empty:
        break;
      case SignWord::Kind::atom:
        ++emitted;
        if (!visit(word.atom_sign())) return emitted;
        break;
      case SignWord::Kind::concat:
        stack.push_back({word.right(), 1});
        stack.push_back({word.left(), 1});
        break;
      case SignWord::Kind::power:
        stack.push_back({word.base(), word.exponent()});
        break;
    }
  }
  return emitted;
}

std::vector<int> expand(const SignWord& w, std::uint64_t cap) {
  if (cmp(w.length(), mpz_class(static_cast<unsigned long>(cap))) > 0) {
    throw DomainError("expand: word of length " + w.length().get_str() + " exceeds cap " +
                      std::to_string(cap));
  }
  std::vector<int> out;
  out.reserve(w.length().get_ui());
  for_each_letter(w, cap, [&](int s) {
    out.push_back(s);
    return true;
  });
  return out;
}

namespace {

// Descends to the atom holding position k, accumulating the sum strictly
// before it.
std::pair<mpz_class, int> locate(const SignWord& w, const mpz_class& k_in) {
  if (k_in < 1 || k_in > w.length()) {
    throw DomainError("prefix index " + k_in.get_str() + " outside [1, " + w.length().get_str() + "]");
  }
  mpz_class k = k_in;
  mpz_class before = 0;
  SignWord node = w;
  for (;;) {
    switch (node.kind()) {
      case SignWord::Kind::empty:
        throw ArithmeticInvariantError("locate: descended into an empty word");
      case SignWord::Kind::atom:
        return {before, node.atom_sign()};
      case SignWord::Kind::concat: {
        SignWord l = node.left();
        if (k <= l.length()) {
          node = l;
        } else {
          before += l.total();
          k -= l.length();
          node = node.right();
        }
        break;
      }
      case SignWord::Kind::power: {
        SignWord b = node.base();
        mpz_class full = (k - 1) / b.length();
        before += full * b.total();
        k -= full * b.length();
        node = b;
        break;
      }
    }
  }
}

}  // namespace

mpz_class prefix_sum_at(const SignWord& w, const mpz_class& k) {
  auto [before, letter] = locate(w, k);
  return before + letter;
}

int letter_at(const SignWord& w, const mpz_class& k) { return locate(w, k).second; }

std::size_t interned_node_count() { return table().live_count(); }

}  // namespace rotn
