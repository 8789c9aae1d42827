#include "ectcert/realroots.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ect {
namespace {

// exact polynomial division over Q; nullopt when the remainder is nonzero
std::optional<PolyQ> try_div(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}


int cmp_rat_endpoint(const Rat& r, const Endpoint& e) {
    if (e.kind == Endpoint::NegInf) return 1;
    if (e.kind == Endpoint::PosInf) return -1;
    return compare(Surd(r), e.value);
}

} // namespace

SturmChain sturm_chain(const PolyZ& p) {
    SturmChain chain;
    if (p.is_zero()) return chain;
    chain.seq.push_back(primitive_part(p));
    if (p.degree() == 0) return chain;
    chain.seq.push_back(primitive_part(derivative(p)));
    while (!chain.seq.back().is_zero() && chain.seq.back().degree() >= 0) {
        const PolyZ& a = chain.seq[chain.seq.size() - 2];
        const PolyZ& b = chain.seq.back();
        if (b.degree() == 0) break;
        PolyZ r = prem_positive(a, b); // lambda * rem(a, b) with lambda > 0
        if (r.is_zero()) break;
        chain.seq.push_back(primitive_part(-r));
    }
    return chain;
}

int sign_at(const PolyZ& p, const Endpoint& e) {
    if (p.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::PosInf: return sign(p.leading());
        case Endpoint::NegInf:
            return p.degree() % 2 == 0 ? sign(p.leading()) : -sign(p.leading());
        case Endpoint::Finite: return sign(eval_at(p, e.value));
    }
    return 0;
}

long sign_variations(const SturmChain& chain, const Endpoint& e) {
    long v = 0;
    int prev = 0;
    for (const auto& p : chain.seq) {
        int s = sign_at(p, e);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

RootCount count_roots(const PolyQ& p, const Endpoint& a, const Endpoint& b) {
    if (p.is_zero()) throw std::domain_error("count_roots: zero polynomial");
    if (compare(a, b) >= 0) throw std::domain_error("count_roots: empty interval");
    RootCount out;

    // squarefree part (roots are counted without multiplicity)
    PolyQ ps = squarefree_part(p);

    // divide out roots sitting exactly on a finite endpoint
    std::vector<PolyZ> divided; // distinct minimal polynomials already removed
    std::vector<Surd> removed_roots;
    auto handle_endpoint = [&](const Endpoint& e, const char* which) {
        if (e.kind != Endpoint::Finite) return;
        PolyZ pz = to_integer_poly(ps).poly;
        if (pz.is_zero() || sign(eval_at(pz, e.value)) != 0) return;
        PolyZ mp = minimal_poly(e.value);
        if (std::find(divided.begin(), divided.end(), mp) != divided.end()) return;
        divided.push_back(mp);
        // multiplicity in the original polynomial
        long mult = 0;
        PolyQ rest = p;
        PolyQ mq = to_rat_poly(mp);
        while (auto q = try_div(rest, mq)) {
            rest = *q;
            ++mult;
        }
        out.adjustments.push_back({which, to_string(e.value), mult});
        ps = *try_div(ps, mq);
        // record all roots of the minimal polynomial for the inside-check below
        removed_roots.push_back(e.value);
        if (mp.degree() == 2) {
            Surd conj(e.value.a, -e.value.b, e.value.d);
            removed_roots.push_back(conj);
        }
    };
    handle_endpoint(a, "left");
    handle_endpoint(b, "right");

    PolyZ chain_poly = to_integer_poly(ps).poly;
    if (chain_poly.degree() <= 0) {
        out.count = 0;
    } else {
        SturmChain chain = sturm_chain(chain_poly);
        out.count = sign_variations(chain, a) - sign_variations(chain, b);
    }
    // dividing by a quadratic minimal polynomial also removes the conjugate
    // root, which may lie strictly inside the interval; add it back
    for (const auto& r : removed_roots) {
        Endpoint re{Endpoint::Finite, r};
        if (compare(a, re) < 0 && compare(re, b) < 0) ++out.count;
    }
    return out;
}

RootCount count_roots(const PolyZ& p, const Endpoint& a, const Endpoint& b) {
    return count_roots(to_rat_poly(p), a, b);
}

std::vector<std::pair<Rat, Rat>> isolate_roots(const PolyZ& p, const Endpoint& a,
                                               const Endpoint& b) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.is_zero()) throw std::domain_error("isolate_roots: zero polynomial");
    PolyQ psq = squarefree_part(to_rat_poly(p));
    // roots exactly on a finite endpoint would make the inside/outside
    // refinement below run forever; divide them out (they are not inside)
    for (const Endpoint* e : {&a, &b}) {
        if (e->kind != Endpoint::Finite) continue;
        PolyZ pz = to_integer_poly(psq).poly;
        if (pz.is_zero() || sign(eval_at(pz, e->value)) != 0) continue;
        if (auto q = try_div(psq, to_rat_poly(minimal_poly(e->value)))) psq = *q;
    }
    PolyZ ps = to_integer_poly(psq).poly;
    if (ps.degree() <= 0) return out;
    SturmChain chain = sturm_chain(ps);

    auto val = [&](const Rat& r) { return sign(eval_as<Rat>(to_rat_poly(ps), r)); };
    auto vcount = [&](const Rat& r) {
        return sign_variations(chain, Endpoint{Endpoint::Finite, Surd(r)});
    };

    Rat M = cauchy_bound(ps) + 1;
    std::deque<std::pair<Rat, Rat>> work;
    work.emplace_back(-M, M);
    std::vector<std::pair<Rat, Rat>> isolated; // V(l)-V(r) == 1 on each
    while (!work.empty()) {
        auto [l, r] = work.front();
        work.pop_front();
        long n = vcount(l) - vcount(r);
        if (n <= 0) continue;
        if (n == 1) {
            isolated.emplace_back(l, r);
            continue;
        }
        // pick a non-root split point near the middle
        Rat mid = (l + r) / 2;
        Rat step = (r - l) / 4;
        long tries = 0;
        while (val(mid) == 0) {
            mid += step;
            step = step / 2;
            if (++tries > ps.degree() + 2)
                throw std::logic_error("isolate_roots: could not find a non-root split");
        }
        work.emplace_back(l, mid);
        work.emplace_back(mid, r);
    }

    // refine each isolating interval until it lies entirely inside or outside (a,b)
    for (auto& [l, r] : isolated) {
        bool keep = false;
        while (true) {
            if (cmp_rat_endpoint(l, a) > 0 && cmp_rat_endpoint(r, b) < 0) {
                keep = true;
                break;
            }
            if (cmp_rat_endpoint(r, a) <= 0 || cmp_rat_endpoint(l, b) >= 0) {
                keep = false;
                break;
            }
            Rat mid = (l + r) / 2;
            int sm = val(mid);
            if (sm == 0) { // the root is exactly mid
                keep = cmp_rat_endpoint(mid, a) > 0 && cmp_rat_endpoint(mid, b) < 0;
                l = mid;
                r = mid;
                break;
            }
            if (sm * val(l) < 0)
                r = mid;
            else
                l = mid;
        }
        if (keep) out.emplace_back(l, r);
    }
    return out;
}

} // namespace ect
