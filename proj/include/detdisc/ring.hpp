#pragma once

#include "detdisc/field.hpp"
#include "detdisc/monomial.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace detdisc {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

enum class BlockType { Lex, DegRevLex, NegLex, NegDegRevLex };

/// One comparison block of a term order: an ordered variable subset plus the
/// comparison used on it.  Lex and DegRevLex are global (1 < x), NegLex and
/// NegDegRevLex are local (1 > x).
struct OrderBlock {
    BlockType type;
    std::vector<int> vars;
};

enum class ModuleRule { TermOverPosition, PositionOverTerm };

/// Block-structured term order, optionally extended to free modules.
/// Component precedence is ascending: gen(0) beats gen(1).
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(std::vector<OrderBlock> blocks, ModuleRule rule = ModuleRule::TermOverPosition)
        : blocks_(std::move(blocks)), rule_(rule) {}

    static TermOrder degrevlex(int nvars);
    static TermOrder lex(int nvars);
    static TermOrder local(int nvars); // NegDegRevLex on all variables
    /// drop-block first (global degrevlex), keep-block second: the standard
    /// elimination order for the dropped variables.
    static TermOrder elimination(const std::vector<int>& drop, const std::vector<int>& keep);

    const std::vector<OrderBlock>& blocks() const { return blocks_; }
    ModuleRule module_rule() const { return rule_; }

    /// -1 / 0 / +1 for a < b / a == b / a > b.
    int cmp(const Monomial& a, const Monomial& b) const;
    int cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const;

    bool is_global() const;
    bool is_local() const;

    /// Variables whose block comparison is local (1 > x), as a mask.
    std::uint32_t local_mask() const;

    /// Checks that the blocks partition {0..nvars-1}.
    void validate(int nvars) const;

    std::string key() const; // cache key, order-defining

private:
    std::vector<OrderBlock> blocks_;
    ModuleRule rule_ = ModuleRule::TermOverPosition;
};

/// Immutable ring context: a coefficient field plus named variables.  Every
/// polynomial points to the ring it lives in; cross-ring operations throw.
class Ring : public std::enable_shared_from_this<Ring> {
public:
    static RingPtr make(Field f, std::vector<std::string> vars);

    const Field& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(int i) const { return vars_[i]; }

    /// Index of a named variable, -1 if absent.
    int var_index(const std::string& name) const;

    bool same(const Ring& o) const { return field_ == o.field_ && vars_ == o.vars_; }

    /// Ring with extra variables appended.
    RingPtr extended(const std::vector<std::string>& extra) const;
    /// Ring with only the named variables (in the given listing order).
    RingPtr subring(const std::vector<std::string>& keep) const;
    /// Same variables over another coefficient field.
    RingPtr with_field(const Field& f) const;

    /// Canonical total order used for the internal representation of every
    /// polynomial of this ring: degrevlex over all variables, term over
    /// position.
    const TermOrder& canonical_order() const { return canon_; }

    std::uint32_t var_mask(const std::vector<int>& idx) const;
    std::uint32_t all_mask() const { return nvars() >= 32 ? ~0u : (1u << nvars()) - 1u; }

    /// Variable names not colliding with existing ones: base1, base2, ...
    /// (with underscores prepended on collision).
    std::vector<std::string> fresh_names(const std::string& base, int count) const;

private:
    Ring() = default;
    Field field_;
    std::vector<std::string> vars_;
    std::unordered_map<std::string, int> index_;
    TermOrder canon_;
};

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !a->same(*b)) throw RingMismatchError("operands live in different ring contexts");
}

} // namespace detdisc
