#include "critgraph/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace critgraph {
namespace oracle {

namespace {

// Union-find small enough to live on the stack of the inner loop.
struct MiniUF {
    std::vector<std::size_t> parent;
    explicit MiniUF(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

bool subset_is_spanning_tree(const DecoratedGraph& g, const std::vector<std::size_t>& edges) {
    MiniUF uf(g.n_vertices());
    for (std::size_t e : edges) {
        const Edge& ed = g.edge(e);
        if (ed.is_loop()) return false;
        if (!uf.unite(ed.tail, ed.head)) return false;
    }
    return true;  // |V|-1 acyclic edges on |V| vertices span
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Combination of given rank in lexicographic order (combinatorial number
// system), as ascending indices into [0, n).
std::vector<std::size_t> unrank_combination(std::size_t n, std::size_t k, std::uint64_t rank) {
    std::vector<std::size_t> c(k);
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) {
        while (true) {
            std::uint64_t count = binomial_u64(n - x - 1, k - i - 1);
            if (rank < count) break;
            rank -= count;
            ++x;
        }
        c[i] = x++;
    }
    return c;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

void check_tree_guard(const DecoratedGraph& g) {
    if (g.n_edges() > kMaxEdgesForTreeEnumeration)
        throw GuardViolation("spanning-tree enumeration guard: |E| = " +
                             std::to_string(g.n_edges()) + " exceeds " +
                             std::to_string(kMaxEdgesForTreeEnumeration));
}

Int omitted_weight(const DecoratedGraph& g, const std::vector<std::size_t>& tree) {
    Int w(1);
    std::size_t next = 0;
    for (std::size_t e = 0; e < g.n_edges(); ++e) {
        if (next < tree.size() && tree[next] == e) {
            ++next;
            continue;
        }
        w *= g.edge(e).thickness;
    }
    return w;
}

long kernel_label_space(const DecoratedGraph& g, long ell) {
    if (ell < 1) throw std::invalid_argument("kernel enumeration: level must be >= 1");
    Int space(1);
    for (const Edge& e : g.edges()) {
        space *= Int(ell) * e.thickness;
        if (space > kMaxLabelsForKernelEnumeration)
            throw GuardViolation("kernel enumeration guard: label space exceeds " +
                                 std::to_string(kMaxLabelsForKernelEnumeration));
    }
    return space.get_si();
}

struct KernelScan {
    std::vector<long> moduli;          // ell * t_e
    std::vector<long> row_scale;       // T / (ell * t_e)
    long big_modulus = 1;              // T = lcm of moduli
    IntMat incidence;

    explicit KernelScan(const DecoratedGraph& g, long ell) : incidence(incidence_matrix(g)) {
        Int t(1);
        for (const Edge& e : g.edges()) t = int_lcm(t, Int(ell) * e.thickness);
        big_modulus = t.get_si();
        for (const Edge& e : g.edges()) {
            moduli.push_back(ell * e.thickness);
            row_scale.push_back(big_modulus / (ell * e.thickness));
        }
    }

    bool in_kernel(const std::vector<long>& a) const {
        for (std::size_t v = 0; v < incidence.rows(); ++v) {
            long long sum = 0;
            for (std::size_t e = 0; e < a.size(); ++e) {
                long co = static_cast<long>(incidence(v, e).get_si());
                if (co) sum = (sum + co * static_cast<long long>(a[e]) % big_modulus) % big_modulus;
            }
            if (sum % big_modulus != 0) return false;
        }
        return true;
    }

    std::vector<long> unrank(long rank) const {
        std::vector<long> a(moduli.size());
        for (std::size_t e = 0; e < moduli.size(); ++e) {
            a[e] = rank % moduli[e];
            rank /= moduli[e];
        }
        return a;
    }

    long element_order(const std::vector<long>& a) const {
        long ord = 1;
        for (std::size_t e = 0; e < a.size(); ++e) {
            long o = moduli[e] / std::gcd(a[e], moduli[e]);
            ord = std::lcm(ord, o);
        }
        return ord;
    }
};

FiniteAbelianGroup group_from_long_counts(const std::map<long, long>& counts) {
    std::map<Int, Int> big;
    for (const auto& [o, c] : counts) big[Int(o)] = Int(c);
    return group_from_order_counts(big);
}

}  // namespace

std::vector<SpanningTree> enumerate_spanning_trees(const DecoratedGraph& g) {
    check_tree_guard(g);
    const std::size_t n = g.n_vertices();
    const std::size_t m = g.n_edges();
    std::vector<SpanningTree> out;
    if (n == 1) {
        out.push_back(SpanningTree{{}});
        return out;
    }
    if (m < n - 1) return out;
    std::vector<std::size_t> c(n - 1);
    std::iota(c.begin(), c.end(), 0);
    do {
        if (subset_is_spanning_tree(g, c)) out.push_back(SpanningTree{c});
    } while (next_combination(c, m));
    return out;
}

Int complexity_by_trees_serial(const DecoratedGraph& g) {
    check_tree_guard(g);
    Int total(0);
    for (const SpanningTree& t : enumerate_spanning_trees(g)) total += omitted_weight(g, t.edges);
    return total;
}

Int complexity_by_trees(const DecoratedGraph& g) {
    check_tree_guard(g);
    const std::size_t n = g.n_vertices();
    const std::size_t m = g.n_edges();
    if (n == 1) {
        Int w(1);
        for (const Edge& e : g.edges()) w *= e.thickness;
        return w;
    }
    if (m < n - 1) return Int(0);
    const std::uint64_t total = binomial_u64(m, n - 1);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
    std::vector<Int> partial(threads, Int(0));
#pragma omp parallel
    {
        const int tid = omp_get_thread_num();
        const std::uint64_t chunk = (total + threads - 1) / threads;
        const std::uint64_t begin = std::min<std::uint64_t>(chunk * tid, total);
        const std::uint64_t end = std::min<std::uint64_t>(begin + chunk, total);
        if (begin < end) {
            std::vector<std::size_t> c = unrank_combination(m, n - 1, begin);
            Int local(0);
            for (std::uint64_t r = begin; r < end; ++r) {
                if (subset_is_spanning_tree(g, c)) local += omitted_weight(g, c);
                if (r + 1 < end) next_combination(c, m);
            }
            partial[tid] = local;
        }
    }
    Int sum(0);
    for (const Int& p : partial) sum += p;
    return sum;
#else
    (void)total;
    return complexity_by_trees_serial(g);
#endif
}

FiniteAbelianGroup kernel_by_enumeration_serial(const DecoratedGraph& g, long ell) {
    const long space = kernel_label_space(g, ell);
    KernelScan scan(g, ell);
    std::map<long, long> counts;
    std::vector<long> a(g.n_edges(), 0);
    for (long rank = 0; rank < space; ++rank) {
        a = scan.unrank(rank);
        if (scan.in_kernel(a)) ++counts[scan.element_order(a)];
    }
    return group_from_long_counts(counts);
}

FiniteAbelianGroup kernel_by_enumeration(const DecoratedGraph& g, long ell) {
    const long space = kernel_label_space(g, ell);
    KernelScan scan(g, ell);
    std::map<long, long> counts;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::map<long, long> local;
#pragma omp for schedule(static)
        for (long rank = 0; rank < space; ++rank) {
            std::vector<long> a = scan.unrank(rank);
            if (scan.in_kernel(a)) ++local[scan.element_order(a)];
        }
#pragma omp critical
        for (const auto& [o, c] : local) counts[o] += c;
    }
#else
    for (long rank = 0; rank < space; ++rank) {
        std::vector<long> a = scan.unrank(rank);
        if (scan.in_kernel(a)) ++counts[scan.element_order(a)];
    }
#endif
    return group_from_long_counts(counts);
}

std::vector<std::vector<Int>> enumerate_kernel_labels(const DecoratedGraph& g, long ell) {
    const long space = kernel_label_space(g, ell);
    KernelScan scan(g, ell);
    std::vector<std::vector<Int>> out;
    for (long rank = 0; rank < space; ++rank) {
        std::vector<long> a = scan.unrank(rank);
        if (scan.in_kernel(a)) {
            std::vector<Int> label(a.size());
            for (std::size_t e = 0; e < a.size(); ++e) label[e] = a[e];
            out.push_back(std::move(label));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
}  // namespace critgraph
