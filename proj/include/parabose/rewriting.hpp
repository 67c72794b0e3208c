#ifndef PARABOSE_REWRITING_HPP
#define PARABOSE_REWRITING_HPP

#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "parabose/element.hpp"

namespace parabose {

/// Which quotient of the free algebra is in force.
enum class ContextKind { Free, Boson, Paraboson, ParabosonG, ParabosonK };

std::string_view context_name(ContextKind kind);
/// Accepts the CLI spellings: free, boson, pb, pbg, pbk.
std::optional<ContextKind> parse_context_kind(std::string_view name);

class ForeignLetter : public std::runtime_error {
 public:
  ForeignLetter(const Generator& letter, ContextKind ctx);
  const Generator& letter() const { return letter_; }

 private:
  Generator letter_;
};

/// Raised when a derived bracket of two E symbols does not close on the
/// E symbols. The even part must close, so this always indicates a bug.
class ClosureFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace detail {
struct ReductionCache;
}

/// A rewriting system over adjacent letter pairs plus a memo of word
/// normal forms. Copies share the memo; the memo is internally locked, so
/// a context may be used from several threads.
class AlgebraContext {
 public:
  explicit AlgebraContext(ContextKind kind);

  ContextKind kind() const { return kind_; }
  std::string_view name() const { return context_name(kind_); }

  bool admits(const Generator& x) const;
  /// Throws ForeignLetter on the first letter outside the alphabet.
  void check_letters(const Word& w) const;
  void check_letters(const Element& a) const;

  /// Replacement for the adjacent pair (left, right), or nullopt if the pair
  /// is already in normal order.
  std::optional<Element> rewrite(const Generator& left, const Generator& right) const;

  /// Memoized normal form of one word whose letters are admitted.
  Element reduce(const Word& w) const;

  std::size_t cache_size() const;

 private:
  ContextKind kind_;
  std::shared_ptr<detail::ReductionCache> cache_;
};

/// Canonical representative of a modulo the context's defining ideal.
Element normal_form(const Element& a, const AlgebraContext& ctx);

/// Same result as normal_form, reached by applying rules at randomly chosen
/// reducible positions of randomly chosen terms, with no memo.
Element normal_form_randomized(const Element& a, const AlgebraContext& ctx, std::mt19937_64& rng);

/// Well-founded order that every rule strictly decreases:
/// (number of B letters, length, inversions w.r.t. the letter order).
using TermOrderKey = std::tuple<std::size_t, std::size_t, std::size_t>;
TermOrderKey term_order_key(const Word& w);

/// Replaces every E(a, b) by B_a B_b + B_b B_a.
Element expand_E(const Element& a);

/// [E, B] read off the paraboson relation
///   [{B_i^x, B_j^y}, B_k^z] = (z - y) d_jk B_i^x + (z - x) d_ik B_j^y.
Element eb_bracket(const Generator& e, const Generator& b);

/// [E, E'] derived as [E, {B_c, B_d}] = {[E, B_c], B_d} + {B_c, [E, B_d]}
/// and re-collected into E symbols. Throws ClosureFailure if the degree-two
/// part is not symmetric.
Element ee_bracket(const Generator& e1, const Generator& e2);

struct BracketRule {
  Generator left;
  Generator right;
  Element bracket;  // [left, right]
};

/// All [E, E'] with E < E' over symbols with indices in [1, max_index].
std::vector<BracketRule> derive_EE_brackets(std::uint32_t max_index);

/// Every E symbol with both indices in [1, max_index].
std::vector<Generator> e_symbols(std::uint32_t max_index);

/// Relabels paraboson letters as bosons and returns the boson normal form.
/// E symbols are expanded first; g or K letters raise ForeignLetter.
Element phi_replacement(const Element& a);

}  // namespace parabose

#endif
