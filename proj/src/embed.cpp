#include "g2v/embed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "g2v/classify.hpp"

namespace g2v {

namespace {

std::string weight_str(const Weight& w) {
    return "(" + rat_to_string(w.lambda1) + ", " + rat_to_string(w.lambda2) + ")";
}

std::string sv_label(const SvType& t) {
    switch (t.kind) {
        case SvType::Kind::i:
            return "i(p1=" + std::to_string(t.p) + ")";
        case SvType::Kind::ii:
            return "ii(p2=" + std::to_string(t.p) + ")";
        case SvType::Kind::iii:
            return "iii(p3=" + std::to_string(t.p) + ",q3=" + std::to_string(t.q) + ")";
        case SvType::Kind::iv:
            return "iv(p4=" + std::to_string(t.p) + ")";
        case SvType::Kind::v:
            return "v(p5=" + std::to_string(t.p) + ")";
    }
    throw std::invalid_argument("unknown singular vector type");
}

// Nodes sorted by ascending weight sum, then lexicographically.  Every
// embedding strictly increases (sum, lambda1), so the root sorts first.
bool node_less(const Weight& a, const Weight& b) {
    Rational sa = a.lambda1 + a.lambda2;
    Rational sb = b.lambda1 + b.lambda2;
    if (sa != sb) return sa < sb;
    if (a.lambda1 != b.lambda1) return a.lambda1 < b.lambda1;
    return a.lambda2 < b.lambda2;
}

void canonicalize(EmbeddingDiagram& d) {
    std::vector<int> order(d.nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return node_less(d.nodes[a], d.nodes[b]); });
    std::vector<int> remap(d.nodes.size());
    std::vector<Weight> nodes;
    nodes.reserve(d.nodes.size());
    for (size_t pos = 0; pos < order.size(); ++pos) {
        remap[order[pos]] = static_cast<int>(pos);
        nodes.push_back(d.nodes[order[pos]]);
    }
    d.nodes = std::move(nodes);
    for (Edge& e : d.edges) {
        e.src = remap[e.src];
        e.dst = remap[e.dst];
    }
    std::sort(d.edges.begin(), d.edges.end());
}

// Unnormalized case diagram: node weights as listed for the case, edges
// by node index with only the intended type recorded.
struct Proto {
    std::vector<Weight> nodes;
    std::vector<std::tuple<int, int, SvType::Kind>> edges;

    int add(const Weight& w) {
        nodes.push_back(w);
        return static_cast<int>(nodes.size()) - 1;
    }
    void link(int src, int dst, SvType::Kind kind) { edges.emplace_back(src, dst, kind); }
};

Rational get_param(const std::map<std::string, Rational>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("missing parameter '" + key + "'");
    return it->second;
}

long get_pos_int(const std::map<std::string, Rational>& params, const std::string& key) {
    Rational v = get_param(params, key);
    if (!is_positive_integer(v))
        throw std::invalid_argument("parameter '" + key + "' must be a positive integer");
    return to_long(v);
}

void require_regime(bool ok, const std::string& case_id, const std::string& what) {
    if (!ok) throw std::domain_error("case " + case_id + " requires " + what);
}

// The root weight of each case determines its full reducibility pattern;
// reject parameters whose root classifies into a different case.
void require_family(const Weight& root, const std::string& case_id,
                    const std::string& family) {
    std::string got = case_label(classify(root));
    if (got != family)
        throw std::domain_error("case " + case_id + " parameters give a weight of case " +
                                got);
}

// Normalizes a case diagram: merge equal nodes, re-derive every edge's
// parameters from the weight offset and drop edges that do not resolve to
// a valid singular vector type, drop duplicates, prune unreachable nodes.
EmbeddingDiagram resolve(const Proto& proto, std::vector<std::string>* notes) {
    auto note = [&](const std::string& line) {
        if (notes) notes->push_back(line);
    };

    std::vector<Weight> nodes;
    std::vector<int> remap(proto.nodes.size());
    for (size_t i = 0; i < proto.nodes.size(); ++i) {
        const Weight& w = proto.nodes[i];
        auto it = std::find(nodes.begin(), nodes.end(), w);
        if (it != nodes.end()) {
            remap[i] = static_cast<int>(it - nodes.begin());
            note("merged duplicate node " + weight_str(w));
        } else {
            remap[i] = static_cast<int>(nodes.size());
            nodes.push_back(w);
        }
    }

    std::vector<Edge> edges;
    std::set<std::tuple<int, int, SvType>> seen;
    for (const auto& [ps, pd, kind] : proto.edges) {
        int src = remap[ps];
        int dst = remap[pd];
        std::string desc = weight_str(nodes[src]) + " -> " + weight_str(nodes[dst]);
        if (src == dst) {
            note("dropped self-loop edge at " + weight_str(nodes[src]));
            continue;
        }
        Rational d1 = nodes[dst].lambda1 - nodes[src].lambda1;
        Rational d2 = nodes[dst].lambda2 - nodes[src].lambda2;
        bool shape_ok = true;
        Rational p, q;
        switch (kind) {
            case SvType::Kind::i:
                shape_ok = (d2 == -d1);
                p = 2 * d1;
                break;
            case SvType::Kind::ii:
                shape_ok = (d1 == 0);
                p = d2;
                break;
            case SvType::Kind::iii:
                p = 2 * d1;
                q = d1 + d2;
                break;
            case SvType::Kind::iv:
                shape_ok = (d1 == d2);
                p = 2 * d1;
                break;
            case SvType::Kind::v:
                shape_ok = (d2 == 0);
                p = d1;
                break;
        }
        if (!shape_ok) {
            note("dropped edge " + desc + ": offset does not match a type-" +
                 SvType{kind, 1, 1}.name() + " embedding");
            continue;
        }
        if (!is_positive_integer(p) ||
            (kind == SvType::Kind::iii && !is_positive_integer(q))) {
            note("dropped edge " + desc + ": parameters are not positive integers");
            continue;
        }
        long pl = to_long(p);
        long ql = kind == SvType::Kind::iii ? to_long(q) : 0;
        if (kind == SvType::Kind::iii && (pl == ql || pl == 2 * ql)) {
            note("dropped edge " + desc + ": excluded degenerate type-iii parameters");
            continue;
        }
        SvType t{kind, static_cast<int>(pl), static_cast<int>(ql)};
        if (!seen.insert({src, dst, t}).second) {
            note("dropped duplicate edge " + desc + " [" + sv_label(t) + "]");
            continue;
        }
        edges.push_back(Edge{src, dst, t});
    }

    std::vector<char> reachable(nodes.size(), 0);
    reachable[0] = 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Edge& e : edges) {
            if (reachable[e.src] && !reachable[e.dst]) {
                reachable[e.dst] = 1;
                grew = true;
            }
        }
    }

    EmbeddingDiagram out;
    std::vector<int> keep(nodes.size(), -1);
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (reachable[i]) {
            keep[i] = static_cast<int>(out.nodes.size());
            out.nodes.push_back(nodes[i]);
        } else {
            note("pruned unreachable node " + weight_str(nodes[i]));
        }
    }
    for (const Edge& e : edges) {
        if (keep[e.src] >= 0 && keep[e.dst] >= 0)
            out.edges.push_back(Edge{keep[e.src], keep[e.dst], e.type});
    }
    canonicalize(out);
    return out;
}

using K = SvType::Kind;

// Cases rooted at a weight with both a type-iii singular vector and its
// companions; the relative positions of all submodules depend only on
// (p3, q3).
Proto proto_iii_family(const std::string& case_id, long P, long Q) {
    Proto pr;
    Weight base{Rational(5, 4) - frac(P - Q, 2), Rational(3, 4) - frac(Q, 2)};
    auto off = [&](const Rational& d1, const Rational& d2) {
        return Weight{base.lambda1 + d1, base.lambda2 + d2};
    };
    int n0 = pr.add(base);
    if (case_id == "A234") {
        int n2 = pr.add(off(0, Q));
        int n3 = pr.add(off(frac(P, 2), Q - frac(P, 2)));
        int n4 = pr.add(off(frac(P, 2), frac(P, 2)));
        pr.link(n0, n2, K::ii);
        pr.link(n0, n3, K::iii);
        pr.link(n0, n4, K::iv);
        pr.link(n2, n3, K::i);
        pr.link(n4, n3, K::ii);
    } else if (case_id == "A2345") {
        int n2 = pr.add(off(0, Q));
        int n3 = pr.add(off(frac(P, 2), Q - frac(P, 2)));
        int n4 = pr.add(off(frac(P, 2), frac(P, 2)));
        int n5 = pr.add(off(P - Q, 0));
        int nt = pr.add(off(P - Q, Q));
        pr.link(n0, n2, K::ii);
        pr.link(n0, n3, K::iii);
        pr.link(n0, n4, K::iv);
        pr.link(n0, n5, K::v);
        pr.link(n2, nt, K::v);
        pr.link(n2, n3, K::i);
        pr.link(n3, n4, K::ii);
        pr.link(nt, n4, K::i);
        pr.link(n5, n3, K::iv);
        pr.link(n5, nt, K::ii);
        pr.link(n5, n4, K::iii);
    } else {
        int n1 = pr.add(off(frac(P - 2 * Q, 2), -frac(P - 2 * Q, 2)));
        int n2 = pr.add(off(0, Q));
        int n3 = pr.add(off(frac(P, 2), Q - frac(P, 2)));
        int n4 = pr.add(off(frac(P, 2), frac(P, 2)));
        int n5 = pr.add(off(P - Q, 0));
        int n12 = pr.add(off(frac(P - 2 * Q, 2), frac(P, 2)));
        int nt = pr.add(off(P - Q, Q));
        pr.link(n0, n1, K::i);
        pr.link(n0, n2, K::ii);
        pr.link(n0, n3, K::iii);
        pr.link(n0, n4, K::iv);
        pr.link(n0, n5, K::v);
        pr.link(n1, n3, K::v);
        pr.link(n1, n12, K::ii);
        pr.link(n1, nt, K::iv);
        pr.link(n1, n5, K::iii);
        pr.link(n2, n3, K::i);
        pr.link(n2, nt, K::v);
        pr.link(n2, n12, K::iv);
        pr.link(n3, n4, K::ii);
        pr.link(n3, nt, K::iii);
        pr.link(n3, n5, K::iv);
        pr.link(n12, n4, K::v);
        pr.link(n12, n5, K::i);
        pr.link(n4, nt, K::i);
        pr.link(n5, nt, K::ii);
    }
    return pr;
}

Proto proto_a245(long p) {
    Proto pr;
    Weight base{Rational(5, 4) - frac(p, 2), Rational(3, 4) - frac(p, 2)};
    int n0 = pr.add(base);
    int n1 = pr.add(Weight{base.lambda1, base.lambda2 + p});
    int n2 = pr.add(Weight{base.lambda1 + p, base.lambda2});
    int n3 = pr.add(Weight{base.lambda1 + p, base.lambda2 + p});
    pr.link(n0, n1, K::ii);
    pr.link(n0, n3, K::iv);
    pr.link(n0, n2, K::v);
    pr.link(n1, n2, K::i);
    pr.link(n1, n3, K::v);
    pr.link(n2, n3, K::ii);
    return pr;
}

Proto proto_a145(long p4, long p5) {
    Proto pr;
    int n0 = pr.add(Weight{Rational(5, 4) - frac(p5, 2), Rational(3, 4) - frac(p4 - p5, 2)});
    int n1 = pr.add(Weight{Rational(5, 4) + frac(p5 - p4, 2), Rational(3, 4) - frac(p5, 2)});
    int n2 = pr.add(Weight{Rational(5, 4) - frac(p5 - p4, 2), Rational(3, 4) + frac(p5, 2)});
    int n3 = pr.add(Weight{Rational(5, 4) + frac(p5 - p4, 2), Rational(3, 4) + frac(p5, 2)});
    int n4 = pr.add(Weight{Rational(5, 4) + frac(p5, 2), Rational(3, 4) - frac(p5 - p4, 2)});
    int n5 = pr.add(Weight{Rational(5, 4) + frac(p5, 2), Rational(3, 4) + frac(p5 - p4, 2)});
    pr.link(n0, n1, K::i);
    pr.link(n0, n2, K::iv);
    pr.link(n0, n5, K::v);
    pr.link(n1, n3, K::ii);
    pr.link(n1, n5, K::iii);
    pr.link(n1, n4, K::iv);
    pr.link(n2, n4, K::i);
    if (p4 < p5) pr.link(n2, n3, K::v);
    pr.link(n3, n5, K::i);
    pr.link(n4, n5, K::ii);
    return pr;
}

Proto proto_a14(const std::string& case_id, long p1, long q) {
    Proto pr;
    int n0 = pr.add(Weight{1 - frac(q, 2), frac(1 + p1 - q, 2)});
    int n1 = pr.add(Weight{1 + frac(p1 - q, 2), frac(1 - q, 2)});
    int n4 = pr.add(Weight{frac(3 - p1 + q, 2), 1 + frac(q, 2)});
    int n2 = pr.add(Weight{1 + frac(p1 - q, 2), 1 + frac(q, 2)});
    int n3 = pr.add(Weight{Rational(3, 2) + frac(q, 2), frac(1 + p1 - q, 2)});
    int n5 = pr.add(Weight{Rational(3, 2) + frac(q, 2), 1 - frac(p1 - q, 2)});
    pr.link(n0, n1, K::i);
    pr.link(n0, n4, K::iv);
    if (case_id == "A14-1") {
        int n6 = pr.add(Weight{Rational(3, 2) - frac(p1 - q, 2), frac(1 - q, 2)});
        pr.link(n1, n2, K::ii);
        pr.link(n1, n3, K::iii);
        pr.link(n1, n5, K::iv);
        pr.link(n1, n6, K::v);
        pr.link(n2, n3, K::i);
        pr.link(n2, n4, K::v);
        pr.link(n3, n5, K::iv);
        pr.link(n6, n3, K::iv);
        pr.link(n6, n5, K::iii);
        pr.link(n6, n4, K::ii);
        pr.link(n4, n5, K::i);
    } else {
        pr.link(n1, n3, K::iii);
        pr.link(n1, n5, K::iv);
        pr.link(n1, n2, K::ii);
        pr.link(n4, n5, K::i);
        pr.link(n4, n2, K::v);
        pr.link(n5, n3, K::ii);
        pr.link(n2, n3, K::i);
    }
    return pr;
}

Proto proto_a15(long p1, long p5) {
    Proto pr;
    int n0 = pr.add(Weight{Rational(5, 4) - frac(p5, 2), Rational(3, 4) - frac(p5 - p1, 2)});
    int n1 = pr.add(Weight{Rational(5, 4) + frac(p1 - p5, 2), Rational(3, 4) - frac(p5, 2)});
    int n2 = pr.add(Weight{Rational(5, 4) + frac(p5, 2), Rational(3, 4) - frac(p5 - p1, 2)});
    int n3 = pr.add(Weight{Rational(5, 4) + frac(p1 - p5, 2), Rational(3, 4) + frac(p5, 2)});
    pr.link(n0, n1, K::i);
    pr.link(n0, n2, K::v);
    pr.link(n1, n3, K::ii);
    if (2 * p5 < p1) pr.link(n2, n3, K::i);
    return pr;
}

Proto proto_a24(long p) {
    Proto pr;
    int n0 = pr.add(Weight{Rational(5, 4), Rational(3, 4) - frac(p, 2)});
    int n1 = pr.add(Weight{Rational(5, 4), Rational(3, 4) + frac(p, 2)});
    int n2 = pr.add(Weight{Rational(5, 4) + frac(p, 2), Rational(3, 4)});
    pr.link(n0, n1, K::ii);
    pr.link(n0, n2, K::iv);
    pr.link(n1, n2, K::i);
    return pr;
}

Proto proto_a1(const std::string& case_id, long p1, const Rational& L) {
    Proto pr;
    int n0 = pr.add(Weight{L, L + frac(p1 - 1, 2)});
    int n1 = pr.add(Weight{L + frac(p1, 2), L - Rational(1, 2)});
    pr.link(n0, n1, K::i);
    if (case_id == "A1-4") {
        int n2 = pr.add(Weight{L + frac(p1, 2), 2 - L});
        pr.link(n1, n2, K::ii);
    } else if (case_id == "A1-3") {
        int n2 = pr.add(Weight{L + frac(p1, 2), 2 - L});
        int n3 = pr.add(Weight{Rational(5, 2) - L, 2 - L - frac(p1, 2)});
        int n4 = pr.add(Weight{Rational(5, 2) - L, L + frac(p1 - 1, 2)});
        pr.link(n1, n2, K::ii);
        pr.link(n1, n3, K::iv);
        pr.link(n1, n4, K::iii);
        pr.link(n2, n4, K::i);
        pr.link(n3, n4, K::ii);
    } else {
        int n2 = pr.add(Weight{L + frac(p1, 2), 2 - L});
        int n3 = pr.add(Weight{Rational(5, 2) - L, 2 - L - frac(p1, 2)});
        int n4 = pr.add(Weight{Rational(5, 2) - L, L + frac(p1 - 1, 2)});
        int n5 = pr.add(Weight{frac(5 - p1, 2) - L, L - Rational(1, 2)});
        int n6 = pr.add(Weight{frac(5 - p1, 2) - L, 2 - L});
        pr.link(n1, n2, K::ii);
        pr.link(n1, n4, K::iii);
        pr.link(n1, n3, K::iv);
        pr.link(n1, n5, K::v);
        pr.link(n2, n6, K::v);
        pr.link(n2, n4, K::i);
        pr.link(n4, n3, K::ii);
        pr.link(n5, n6, K::ii);
        pr.link(n5, n4, K::iv);
        pr.link(n5, n3, K::iii);
        pr.link(n6, n3, K::i);
    }
    return pr;
}

Proto proto_a2(const std::string& case_id, long p2, const Rational& L) {
    Proto pr;
    int n0 = pr.add(Weight{L, Rational(3, 4) - frac(p2, 2)});
    int n1 = pr.add(Weight{L, Rational(3, 4) + frac(p2, 2)});
    int n2 = pr.add(Weight{Rational(5, 4) + frac(p2, 2), L - Rational(1, 2)});
    pr.link(n0, n1, K::ii);
    pr.link(n1, n2, K::i);
    if (case_id == "A2-3") {
        int n4 = pr.add(Weight{Rational(5, 4) + frac(p2, 2), 2 - L});
        int n6 = pr.add(Weight{Rational(5, 2) - L, Rational(3, 4) + frac(p2, 2)});
        pr.link(n1, n6, K::v);
        pr.link(n2, n4, K::ii);
        pr.link(n6, n4, K::i);
    } else if (case_id == "A2-2") {
        int n3 = pr.add(Weight{Rational(5, 4) - frac(p2, 2), 2 - L});
        int n4 = pr.add(Weight{Rational(5, 4) + frac(p2, 2), 2 - L});
        int n5 = pr.add(Weight{Rational(5, 2) - L, Rational(3, 4) - frac(p2, 2)});
        int n6 = pr.add(Weight{Rational(5, 2) - L, Rational(3, 4) + frac(p2, 2)});
        pr.link(n1, n3, K::iv);
        pr.link(n1, n6, K::v);
        pr.link(n2, n4, K::ii);
        pr.link(n2, n6, K::iii);
        pr.link(n2, n5, K::iv);
        pr.link(n3, n4, K::v);
        pr.link(n3, n5, K::i);
        pr.link(n4, n6, K::i);
        pr.link(n5, n6, K::ii);
    }
    return pr;
}

Proto proto_a4(long p4, const Rational& L) {
    Proto pr;
    Rational four_l = 4 * L;
    int n0 = pr.add(Weight{L, 2 - L - frac(p4, 2)});
    int n1 = pr.add(Weight{L + frac(p4, 2), 2 - L});
    pr.link(n0, n1, K::iv);
    if (four_l > 5) {
        int n2 = pr.add(Weight{L + frac(p4, 2), L - Rational(1, 2)});
        pr.link(n1, n2, K::ii);
    }
    if (four_l < 5 - p4) {
        int n3 = pr.add(Weight{Rational(5, 2) - L, L + frac(p4 - 1, 2)});
        pr.link(n1, n3, K::i);
        if (four_l < 5 - 2 * p4) {
            int n4 = pr.add(Weight{frac(5 - p4, 2) - L, 2 - L});
            int n5 = pr.add(Weight{Rational(5, 2) - L, 2 - L - frac(p4, 2)});
            pr.link(n1, n4, K::v);
            pr.link(n3, n5, K::ii);
            pr.link(n4, n5, K::i);
        }
    }
    return pr;
}

Proto proto_a5(long p5, const Rational& M) {
    Proto pr;
    Rational four_m = 4 * M;
    int n0 = pr.add(Weight{Rational(5, 4) - frac(p5, 2), M});
    int n1 = pr.add(Weight{Rational(5, 4) + frac(p5, 2), M});
    pr.link(n0, n1, K::v);
    if (four_m > 3 + 2 * p5) {
        int n2 = pr.add(Weight{M + Rational(1, 2), Rational(3, 4) + frac(p5, 2)});
        pr.link(n1, n2, K::i);
    }
    if (four_m < 3) {
        int n3 = pr.add(Weight{Rational(5, 4) + frac(p5, 2), Rational(3, 2) - M});
        pr.link(n1, n3, K::ii);
        if (four_m < 3 - 2 * p5) {
            int n4 = pr.add(Weight{2 - M, Rational(3, 4) - frac(p5, 2)});
            int n5 = pr.add(Weight{2 - M, Rational(3, 4) + frac(p5, 2)});
            pr.link(n1, n5, K::iii);
            pr.link(n1, n4, K::iv);
            pr.link(n3, n5, K::i);
            pr.link(n4, n5, K::ii);
        }
    }
    return pr;
}

SvType::Kind kind_from_name(const std::string& name) {
    if (name == "i") return K::i;
    if (name == "ii") return K::ii;
    if (name == "iii") return K::iii;
    if (name == "iv") return K::iv;
    if (name == "v") return K::v;
    throw std::invalid_argument("unknown singular vector type '" + name + "'");
}

nlohmann::json sv_params_json(const SvType& t) {
    nlohmann::json p = nlohmann::json::object();
    switch (t.kind) {
        case K::i:
            p["p1"] = t.p;
            break;
        case K::ii:
            p["p2"] = t.p;
            break;
        case K::iii:
            p["p3"] = t.p;
            p["q3"] = t.q;
            break;
        case K::iv:
            p["p4"] = t.p;
            break;
        case K::v:
            p["p5"] = t.p;
            break;
    }
    return p;
}

}  // namespace

EmbeddingDiagram build_diagram(const Weight& lw, int max_depth) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be at least 1");
    EmbeddingDiagram d;
    std::map<Weight, int> index;
    d.nodes.push_back(lw);
    index.emplace(lw, 0);
    std::vector<int> frontier{0};
    for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
        std::vector<int> next;
        for (int src : frontier) {
            Weight w = d.nodes[src];
            for (const Finding& f : classify(w)) {
                auto [it, fresh] = index.emplace(f.target, static_cast<int>(d.nodes.size()));
                if (fresh) {
                    d.nodes.push_back(f.target);
                    next.push_back(it->second);
                }
                d.edges.push_back(Edge{src, it->second, f.sv_type});
            }
        }
        frontier = std::move(next);
    }
    if (!frontier.empty())
        throw DepthExhausted("embedding diagram of " + weight_str(lw) +
                             " exceeds depth " + std::to_string(max_depth));
    canonicalize(d);
    return d;
}

std::vector<CatalogInstance> catalog_instances() {
    return {
        {"A234", {{"p3", 1}, {"q3", 2}}},
        {"A2345", {{"p3", 3}, {"q3", 2}}},
        {"A12345", {{"p3", 5}, {"q3", 2}}},
        {"A245", {{"p2", 1}}},
        {"A145-1", {{"p4", 1}, {"p5", 2}}},
        {"A145-2", {{"p4", 2}, {"p5", 2}}},
        {"A14-1", {{"p1", 1}, {"q", 1}}},
        {"A14-2", {{"p1", 2}, {"q", 1}}},
        {"A15", {{"p1", 4}, {"p5", 2}}},
        {"A24", {{"p2", 1}}},
        {"A1-2", {{"p1", 2}, {"Lambda1", Rational(1, 8)}}},
        {"A1-3", {{"p1", 2}, {"Lambda1", Rational(3, 8)}}},
        {"A1-4", {{"p1", 2}, {"Lambda1", Rational(7, 8)}}},
        {"A2-2", {{"p2", 1}, {"Lambda1", Rational(1, 3)}}},
        {"A2-3", {{"p2", 1}, {"Lambda1", Rational(7, 8)}}},
        {"A2-4", {{"p2", 1}, {"Lambda1", Rational(11, 8)}}},
        {"A4", {{"p4", 2}, {"Lambda1", Rational(13, 8)}}},
        {"A4", {{"p4", 2}, {"Lambda1", Rational(3, 8)}}},
        {"A4", {{"p4", 2}, {"Lambda1", Rational(1, 8)}}},
        {"A5", {{"p5", 2}, {"Lambda2", Rational(15, 8)}}},
        {"A5", {{"p5", 2}, {"Lambda2", Rational(1, 8)}}},
        {"A5", {{"p5", 2}, {"Lambda2", Rational(-1, 3)}}},
    };
}

std::string catalog_label(const CatalogInstance& inst) {
    std::string s = inst.case_id + "(";
    bool first = true;
    for (const auto& [k, v] : inst.params) {
        if (!first) s += ",";
        first = false;
        s += k + "=" + rat_to_string(v);
    }
    return s + ")";
}

EmbeddingDiagram catalog_diagram(const std::string& case_id,
                                 const std::map<std::string, Rational>& params,
                                 std::vector<std::string>* notes) {
    Proto pr;
    if (case_id == "A234" || case_id == "A2345" || case_id == "A12345") {
        long P = get_pos_int(params, "p3");
        long Q = get_pos_int(params, "q3");
        if (case_id == "A234")
            require_regime(P < Q, case_id, "p3 < q3");
        else if (case_id == "A2345")
            require_regime(Q < P && P < 2 * Q, case_id, "q3 < p3 < 2*q3");
        else
            require_regime(2 * Q < P, case_id, "2*q3 < p3");
        pr = proto_iii_family(case_id, P, Q);
        require_family(pr.nodes[0], case_id, case_id);
    } else if (case_id == "A245") {
        pr = proto_a245(get_pos_int(params, "p2"));
        require_family(pr.nodes[0], case_id, "A245");
    } else if (case_id == "A145-1" || case_id == "A145-2") {
        long p4 = get_pos_int(params, "p4");
        long p5 = get_pos_int(params, "p5");
        if (case_id == "A145-1")
            require_regime(p4 < p5, case_id, "p4 < p5");
        else
            require_regime(p4 == p5, case_id, "p4 = p5");
        pr = proto_a145(p4, p5);
        require_family(pr.nodes[0], case_id, "A145");
    } else if (case_id == "A14-1" || case_id == "A14-2") {
        long p1 = get_pos_int(params, "p1");
        long q = get_pos_int(params, "q");
        if (case_id == "A14-1")
            require_regime(p1 <= q, case_id, "p1 <= q");
        else
            require_regime(q < p1 && p1 <= 2 * q, case_id, "q < p1 <= 2*q");
        pr = proto_a14(case_id, p1, q);
        require_family(pr.nodes[0], case_id, "A14");
    } else if (case_id == "A15") {
        long p1 = get_pos_int(params, "p1");
        long p5 = get_pos_int(params, "p5");
        require_regime(2 * p5 <= p1, case_id, "2*p5 <= p1");
        pr = proto_a15(p1, p5);
        require_family(pr.nodes[0], case_id, "A15");
    } else if (case_id == "A24") {
        pr = proto_a24(get_pos_int(params, "p2"));
        require_family(pr.nodes[0], case_id, "A24");
    } else if (case_id == "A1-2" || case_id == "A1-3" || case_id == "A1-4") {
        long p1 = get_pos_int(params, "p1");
        Rational L = get_param(params, "Lambda1");
        Rational four_l = 4 * L;
        if (case_id == "A1-2")
            require_regime(four_l < 5 - 2 * p1, case_id, "4*Lambda1 < 5 - 2*p1");
        else if (case_id == "A1-3")
            require_regime(5 - 2 * p1 < four_l && four_l < 5 - p1, case_id,
                           "5 - 2*p1 < 4*Lambda1 < 5 - p1");
        else
            require_regime(5 - p1 < four_l && four_l < 5, case_id,
                           "5 - p1 < 4*Lambda1 < 5");
        pr = proto_a1(case_id, p1, L);
        require_family(pr.nodes[0], case_id, "A1");
    } else if (case_id == "A2-2" || case_id == "A2-3" || case_id == "A2-4") {
        long p2 = get_pos_int(params, "p2");
        Rational L = get_param(params, "Lambda1");
        Rational four_l = 4 * L;
        if (case_id == "A2-2")
            require_regime(four_l < 5 - 2 * p2, case_id, "4*Lambda1 < 5 - 2*p2");
        else if (case_id == "A2-3")
            require_regime(5 - 2 * p2 < four_l && four_l < 5, case_id,
                           "5 - 2*p2 < 4*Lambda1 < 5");
        else
            require_regime(Rational(5) < four_l && four_l < 5 + 2 * p2, case_id,
                           "5 < 4*Lambda1 < 5 + 2*p2");
        pr = proto_a2(case_id, p2, L);
        require_family(pr.nodes[0], case_id, "A2");
    } else if (case_id == "A4") {
        long p4 = get_pos_int(params, "p4");
        Rational L = get_param(params, "Lambda1");
        pr = proto_a4(p4, L);
        require_family(pr.nodes[0], case_id, "A4");
    } else if (case_id == "A5") {
        long p5 = get_pos_int(params, "p5");
        Rational M = get_param(params, "Lambda2");
        pr = proto_a5(p5, M);
        require_family(pr.nodes[0], case_id, "A5");
    } else {
        throw std::invalid_argument("unknown case id '" + case_id + "'");
    }
    return resolve(pr, notes);
}

std::string to_dot(const EmbeddingDiagram& d) {
    std::ostringstream os;
    os << "digraph embedding {\n";
    os << "  rankdir=TB;\n";
    for (size_t i = 0; i < d.nodes.size(); ++i)
        os << "  n" << i << " [label=\"" << weight_str(d.nodes[i]) << "\"];\n";
    for (const Edge& e : d.edges)
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << sv_label(e.type)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

nlohmann::json to_json(const EmbeddingDiagram& d) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Weight& w : d.nodes)
        nodes.push_back({rat_to_string(w.lambda1), rat_to_string(w.lambda2)});
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : d.edges)
        edges.push_back({{"src", e.src},
                         {"dst", e.dst},
                         {"type", e.type.name()},
                         {"params", sv_params_json(e.type)}});
    nlohmann::json j;
    j["root"] = nodes.empty() ? nlohmann::json::array() : nodes[0];
    j["nodes"] = nodes;
    j["edges"] = edges;
    return j;
}

EmbeddingDiagram diagram_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("edges") ||
        !j["nodes"].is_array() || !j["edges"].is_array())
        throw std::invalid_argument("diagram JSON must be an object with nodes and edges");
    EmbeddingDiagram d;
    for (const auto& n : j["nodes"]) {
        if (!n.is_array() || n.size() != 2 || !n[0].is_string() || !n[1].is_string())
            throw std::invalid_argument("diagram node must be a pair of rationals");
        d.nodes.push_back(
            Weight{rat_from_string(n[0].get<std::string>()),
                   rat_from_string(n[1].get<std::string>())});
    }
    if (j.contains("root")) {
        if (d.nodes.empty() || !(j["root"] == j["nodes"][0]))
            throw std::invalid_argument("diagram root must equal the first node");
    }
    int n = static_cast<int>(d.nodes.size());
    for (const auto& je : j["edges"]) {
        if (!je.is_object() || !je.contains("src") || !je.contains("dst") ||
            !je.contains("type") || !je["src"].is_number_integer() ||
            !je["dst"].is_number_integer() || !je["type"].is_string())
            throw std::invalid_argument("diagram edge must have src, dst and type");
        int src = je["src"].get<int>();
        int dst = je["dst"].get<int>();
        if (src < 0 || src >= n || dst < 0 || dst >= n)
            throw std::invalid_argument("diagram edge endpoint out of range");
        SvType::Kind kind = kind_from_name(je["type"].get<std::string>());
        const nlohmann::json& params =
            je.contains("params") ? je["params"] : nlohmann::json::object();
        auto param = [&](const char* key) -> int {
            if (!params.contains(key) || !params[key].is_number_integer())
                throw std::invalid_argument(std::string("diagram edge missing parameter ") +
                                            key);
            return params[key].get<int>();
        };
        SvType t;
        t.kind = kind;
        switch (kind) {
            case K::i:
                t.p = param("p1");
                break;
            case K::ii:
                t.p = param("p2");
                break;
            case K::iii:
                t.p = param("p3");
                t.q = param("q3");
                break;
            case K::iv:
                t.p = param("p4");
                break;
            case K::v:
                t.p = param("p5");
                break;
        }
        t.validate();
        d.edges.push_back(Edge{src, dst, t});
    }
    return d;
}

std::vector<std::string> diagram_diff(const EmbeddingDiagram& a,
                                      const EmbeddingDiagram& b) {
    std::vector<std::string> out;
    auto node_keys = [](const EmbeddingDiagram& d) {
        std::multiset<std::string> s;
        for (const Weight& w : d.nodes) s.insert(weight_str(w));
        return s;
    };
    auto edge_keys = [](const EmbeddingDiagram& d) {
        std::multiset<std::string> s;
        for (const Edge& e : d.edges)
            s.insert(weight_str(d.nodes[e.src]) + " -> " + weight_str(d.nodes[e.dst]) +
                     " [" + sv_label(e.type) + "]");
        return s;
    };
    std::multiset<std::string> na = node_keys(a), nb = node_keys(b);
    std::multiset<std::string> ea = edge_keys(a), eb = edge_keys(b);
    std::vector<std::string> only;
    std::set_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(only));
    for (const auto& s : only) out.push_back("node only in first: " + s);
    only.clear();
    std::set_difference(nb.begin(), nb.end(), na.begin(), na.end(), std::back_inserter(only));
    for (const auto& s : only) out.push_back("node only in second: " + s);
    only.clear();
    std::set_difference(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(only));
    for (const auto& s : only) out.push_back("edge only in first: " + s);
    only.clear();
    std::set_difference(eb.begin(), eb.end(), ea.begin(), ea.end(), std::back_inserter(only));
    for (const auto& s : only) out.push_back("edge only in second: " + s);
    return out;
}

}  // namespace g2v
