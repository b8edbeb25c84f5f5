#pragma once

#include <functional>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "remspec/errors.hpp"
#include "remspec/unipoly.hpp"

namespace remspec {

// A proper factorization q = left * right discovered while attempting an
// inversion modulo q. Both parts are monic and non-constant.
struct SplitEvent {
    UniPoly left;
    UniPoly right;
};

// Working scope for arithmetic in Q[t]/(q) with q monic and square-free but
// not necessarily irreducible. Computations proceed as if q were irreducible;
// a decision that depends on which factor of q the "root" t belongs to
// surfaces as a SplitEvent (or, internally, a SplitSignal).
class ExtScope {
public:
    ExtScope() = default; // empty scope; only valid after assignment

    // Normalizes to monic. Requires a square-free modulus of degree >= 1.
    static ExtScope make(const UniPoly& modulus);

    bool valid() const { return static_cast<bool>(q_); }
    const UniPoly& modulus() const { return *q_; }
    int degree() const { return q_->degree(); }

    // Canonical representative of t (already reduced mod q).
    UniPoly generator() const;

    UniPoly reduce(const UniPoly& a) const;
    UniPoly add(const UniPoly& a, const UniPoly& b) const { return reduce(a + b); }
    UniPoly sub(const UniPoly& a, const UniPoly& b) const { return reduce(a - b); }
    UniPoly mul(const UniPoly& a, const UniPoly& b) const { return reduce(a * b); }

    bool same_modulus(const ExtScope& other) const;

private:
    explicit ExtScope(UniPoly q) : q_(std::make_shared<const UniPoly>(std::move(q))) {}
    std::shared_ptr<const UniPoly> q_;
};

// Inverse of a modulo the scope's modulus, or the factorization that blocks
// it. Inverting an exact zero is a precondition violation (MathError).
std::variant<UniPoly, SplitEvent> ext_invert(const UniPoly& a, const ExtScope& scope);

// Internal control-flow signal thrown when a decision cannot be made
// uniformly over the current scope. Deliberately not derived from
// std::exception so ordinary error handling never swallows it; it is caught
// only by branch executors such as run_branches.
struct SplitSignal {
    SplitEvent event;
};

// True iff the (reduced, non-zero) element is invertible on every branch of
// the scope. Never splits: a proper common factor simply yields false.
bool is_invertible_query(const UniPoly& a, const ExtScope& scope);

// Decision form: returns the inverse, throwing SplitSignal when the answer
// differs between branches and MathError on an exact zero.
UniPoly require_inverse(const UniPoly& a, const ExtScope& scope);

// Runs `body` over the scope, transparently re-running it on each factor
// whenever a SplitSignal escapes. Returns one (scope, value) pair per final
// branch; the final moduli are pairwise coprime and multiply to the root
// modulus. The body must be a pure function of its scope argument.
template <typename T>
std::vector<std::pair<ExtScope, T>> run_branches(
    const ExtScope& root, const std::function<T(const ExtScope&)>& body) {
    std::vector<std::pair<ExtScope, T>> results;
    std::vector<ExtScope> pending{root};
    while (!pending.empty()) {
        ExtScope scope = pending.back();
        pending.pop_back();
        try {
            results.emplace_back(scope, body(scope));
        } catch (const SplitSignal& split) {
            pending.push_back(ExtScope::make(split.event.left));
            pending.push_back(ExtScope::make(split.event.right));
        }
    }
    return results;
}

} // namespace remspec
