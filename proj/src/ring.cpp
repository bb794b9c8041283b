#include "detdisc/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace detdisc {

TermOrder TermOrder::degrevlex(int nvars) {
    std::vector<int> v(nvars);
    std::iota(v.begin(), v.end(), 0);
    return TermOrder({OrderBlock{BlockType::DegRevLex, std::move(v)}});
}

TermOrder TermOrder::lex(int nvars) {
    std::vector<int> v(nvars);
    std::iota(v.begin(), v.end(), 0);
    return TermOrder({OrderBlock{BlockType::Lex, std::move(v)}});
}

TermOrder TermOrder::local(int nvars) {
    std::vector<int> v(nvars);
    std::iota(v.begin(), v.end(), 0);
    return TermOrder({OrderBlock{BlockType::NegDegRevLex, std::move(v)}});
}

TermOrder TermOrder::elimination(const std::vector<int>& drop, const std::vector<int>& keep) {
    std::vector<OrderBlock> b;
    b.push_back(OrderBlock{BlockType::DegRevLex, drop});
    if (!keep.empty()) b.push_back(OrderBlock{BlockType::DegRevLex, keep});
    return TermOrder(std::move(b));
}

namespace {

int cmp_block(const OrderBlock& blk, const Monomial& a, const Monomial& b) {
    switch (blk.type) {
    case BlockType::Lex:
        for (int v : blk.vars) {
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
        }
        return 0;
    case BlockType::NegLex:
        for (int v : blk.vars) {
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? -1 : 1;
        }
        return 0;
    case BlockType::DegRevLex: {
        long da = 0, db = 0;
        for (int v : blk.vars) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) return da > db ? 1 : -1;
        for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
            if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
        }
        return 0;
    }
    case BlockType::NegDegRevLex: {
        long da = 0, db = 0;
        for (int v : blk.vars) {
            da += a.e[v];
            db += b.e[v];
        }
        if (da != db) return da > db ? -1 : 1;
        for (auto it = blk.vars.rbegin(); it != blk.vars.rend(); ++it) {
            if (a.e[*it] != b.e[*it]) return a.e[*it] > b.e[*it] ? -1 : 1;
        }
        return 0;
    }
    }
    return 0;
}

} // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    for (const auto& blk : blocks_) {
        int c = cmp_block(blk, a, b);
        if (c) return c;
    }
    return 0;
}

int TermOrder::cmp(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (rule_ == ModuleRule::PositionOverTerm) {
        if (ca != cb) return ca < cb ? 1 : -1;
        return cmp(a, b);
    }
    int c = cmp(a, b);
    if (c) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
}

bool TermOrder::is_global() const {
    for (const auto& blk : blocks_)
        if (blk.type == BlockType::NegLex || blk.type == BlockType::NegDegRevLex) return false;
    return true;
}

bool TermOrder::is_local() const {
    for (const auto& blk : blocks_)
        if (blk.type == BlockType::Lex || blk.type == BlockType::DegRevLex) return false;
    return true;
}

std::uint32_t TermOrder::local_mask() const {
    std::uint32_t m = 0;
    for (const auto& blk : blocks_)
        if (blk.type == BlockType::NegLex || blk.type == BlockType::NegDegRevLex)
            for (int v : blk.vars) m |= 1u << v;
    return m;
}

void TermOrder::validate(int nvars) const {
    std::vector<int> seen(nvars, 0);
    for (const auto& blk : blocks_)
        for (int v : blk.vars) {
            if (v < 0 || v >= nvars) throw PreconditionError("term order references unknown variable");
            ++seen[v];
        }
    for (int v = 0; v < nvars; ++v)
        if (seen[v] != 1) throw PreconditionError("term order blocks must partition the variable set");
}

std::string TermOrder::key() const {
    std::ostringstream os;
    for (const auto& blk : blocks_) {
        os << static_cast<int>(blk.type) << '[';
        for (int v : blk.vars) os << v << ',';
        os << ']';
    }
    os << (rule_ == ModuleRule::TermOverPosition ? "TOP" : "POT");
    return os.str();
}

RingPtr Ring::make(Field f, std::vector<std::string> vars) {
    if (static_cast<int>(vars.size()) > kMaxVars)
        throw PreconditionError("ring exceeds the supported variable count");
    auto r = std::shared_ptr<Ring>(new Ring());
    r->field_ = f;
    r->vars_ = std::move(vars);
    for (int i = 0; i < static_cast<int>(r->vars_.size()); ++i) {
        if (r->vars_[i].empty()) throw PreconditionError("empty variable name");
        if (!r->index_.emplace(r->vars_[i], i).second)
            throw PreconditionError("duplicate variable name: " + r->vars_[i]);
    }
    r->canon_ = TermOrder::degrevlex(r->nvars());
    return r;
}

int Ring::var_index(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

RingPtr Ring::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> v = vars_;
    v.insert(v.end(), extra.begin(), extra.end());
    return make(field_, std::move(v));
}

RingPtr Ring::subring(const std::vector<std::string>& keep) const {
    for (const auto& n : keep)
        if (var_index(n) < 0) throw PreconditionError("subring variable not present: " + n);
    return make(field_, keep);
}

RingPtr Ring::with_field(const Field& f) const { return make(f, vars_); }

std::uint32_t Ring::var_mask(const std::vector<int>& idx) const {
    std::uint32_t m = 0;
    for (int i : idx) m |= 1u << i;
    return m;
}

std::vector<std::string> Ring::fresh_names(const std::string& base, int count) const {
    std::string prefix = base;
    for (;;) {
        bool clash = false;
        for (int i = 1; i <= count && !clash; ++i)
            if (var_index(prefix + std::to_string(i)) >= 0) clash = true;
        if (!clash) break;
        prefix = "_" + prefix;
    }
    std::vector<std::string> out;
    out.reserve(count);
    for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace detdisc
