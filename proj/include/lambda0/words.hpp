#pragma once

#include "lambda0/poly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace lambda0 {

/// A word of length >= 2 over the letters 1, 2, 3.
class Word {
public:
    explicit Word(std::string letters);

    const std::string& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }

    /// Minimum of the S3-orbit under lexicographic letter order.
    std::string canonical() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::string letters_;
};

/// Minimum of the S3-orbit of a letter string.
std::string canonical_letters(std::string_view letters);

/// Value of a bracket: a polynomial in t and x_n, or an Unreduced marker
/// carrying why the derivation stopped and what was left.
struct BracketValue {
    std::optional<LambdaPoly> value;
    std::string reason;   // empty when reduced
    std::string partial;  // remaining expression when unreduced

    bool reduced() const noexcept { return value.has_value(); }
};

/// Evaluates brackets <w> by derivations built from the relations
///   <12> = -t,  <1 2^n 1> = x_{n+1}  (so <11> = 2t, <121> = t^2, <1221> = x3)
///   <w> = <sigma(w)> for sigma in S3
///   <1v> + <2v> + <3v> = <v1> + <v2> + <v3> = 0
///   <u1v> + <u2v> + <u3v> = 2t <uv>
///   <g g v> = t <g v>,  <v g g> = t <v g>
///   <u g v> + <u g sigma_g(v)> = <u g> <g v>
/// The derivation strategy is fixed: square absorption at either end, the
/// middle sum relation at the leftmost interior repeat, and the splitting
/// relation to move every repeat-free word onto the alternating word
/// 1212..., whose value is solved once per length from <1 2^(L-2) 1>.
///
/// Values are memoized by S3-orbit and remain valid across calls. An engine
/// is not thread-safe; use one per thread.
class BracketEngine {
public:
    /// Evaluates <w>, spending at most `budget` new derivation steps.
    BracketValue evaluate(const Word& w, std::size_t budget = kDefaultBudget);

    std::size_t memo_size() const noexcept { return values_.size(); }

    static constexpr std::size_t kDefaultBudget = 5'000'000;

private:
    struct Affine {
        Rational alpha;  // coefficient of the alternating word of this length
        Poly rest;
    };

    Poly value(const std::string& w);
    Affine affine(const std::string& w, bool use_base);
    const Poly& alternating(std::size_t length);
    void charge();

    std::map<std::string, Poly> values_;
    std::map<std::string, Affine> affine_;
    std::map<std::size_t, Poly> alternating_;
    std::size_t budget_ = kDefaultBudget;
    std::size_t spent_ = 0;
};

/// Evaluates with a per-thread engine.
BracketValue bracket_eval(const Word& w, std::size_t budget = BracketEngine::kDefaultBudget);

enum class IdentityStatus { Holds, Fails, Inconclusive };

struct IdentityResult {
    IdentityStatus status = IdentityStatus::Inconclusive;
    LambdaPoly witness;  // normal form of lhs - rhs when the identity fails
    std::string detail;  // which side stayed unreduced, when inconclusive
};

/// Checks one of the derived word identities (numbered as displayed):
///   2: <u212> = -<u221>
///   3: <2 1 2^n 1> = -x_{n+2}
///   4: <2 3 2^n 1> = x_{n+2} - t^{n+2}
///   5: <u 2 1 2^n 1> = 2t <u 2^{n+1} 1> - <u 2^{n+2} 1> - <u 2 3 2^n 1>
///   6: <u 2 3 2^n 1> = <u2><2 3 2^n 1> - <u 2 1 2^n 3>
///                    = <u2><2 3 2^n 1> + <u 2 1 2^n 1> + <u 2 1 2^{n+1}>
///   7: <u 2 1 2^n 1> = t <u 2^{n+1} 1> - 1/2 <u 2^{n+2} 1> - 1/2 t^n <u212>
///                    - 1/2 <u2><2 3 2^n 1>
/// Both sides are compared in Lambda_0, i.e. after normalization onto M.
/// `u` is ignored by 3 and 4, `n` by 2.
IdentityResult verify_word_identity(int id, int n, const std::string& u = "1",
                                    std::size_t budget = BracketEngine::kDefaultBudget);

/// The word 2^{k-1} (12)^i 1 2^j 1.
Word q_word_letters(int i, int j, int k);

/// <2^{k-1} (12)^i 1 2^j 1> for i >= 0, j >= 1, k in {1, 2}.
BracketValue q_word(int i, int j, int k, std::size_t budget = BracketEngine::kDefaultBudget);

/// q_word(i, j, k) == (-1)^{k+1} q_poly(i, j, k) in Lambda_0.
IdentityResult verify_q_word_correspondence(int i, int j, int k,
                                            std::size_t budget = BracketEngine::kDefaultBudget);

/// q_word(i-1, 2, 2) == -q_word(i, 1, 1) in Lambda_0, i >= 1.
IdentityResult verify_q_relation_words(int i, std::size_t budget = BracketEngine::kDefaultBudget);

}  // namespace lambda0
