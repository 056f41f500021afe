#ifndef EHF_SRC_SMALL_CSP_HH
#define EHF_SRC_SMALL_CSP_HH

#include <ehf/graph.hh>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ehf::detail
{
    /**
     * Assigns each variable a value in 0..63, value 0 meaning "left out".
     * Pairwise constraints depend only on whether the two variables are
     * adjacent in the host graph. Maximises the number of variables with a
     * nonzero value, by branch and bound with forward checking.
     */
    class SmallCsp
    {
        public:
            using Mask = std::uint64_t;
            using Assignment = std::vector<int>;

            std::vector<Mask> domain;
            std::vector<std::vector<char>> adjacent;
            std::vector<Mask> compat[2];   ///< compat[adj][x]: values y allowed beside x
            bool mrv = true;

            /// Restricts the values offered to the next variable (fixed order only).
            std::function<Mask (const Assignment &, int var)> dynamic;

            /// Full assignment; returns true if it is a genuine solution.
            std::function<bool (const Assignment &)> accept;

            int best = 0;
            Assignment best_assignment;
            std::uint64_t nodes = 0, max_nodes = 0;
            bool budget_hit = false;

            auto run() -> void
            {
                Assignment val(domain.size(), -1);
                search(val, domain, 0);
            }

        private:
            auto search(Assignment & val, const std::vector<Mask> & dom, int count) -> void
            {
                if (budget_hit)
                    return;
                if (max_nodes != 0 && nodes >= max_nodes) {
                    budget_hit = true;
                    return;
                }
                ++nodes;

                int n = static_cast<int>(val.size());
                int reachable = 0, pick = -1, pick_size = 65;
                for (int v = 0 ; v < n ; ++v)
                    if (val[v] == -1) {
                        if (dom[v] & ~Mask{ 1 })
                            ++reachable;
                        int size = std::popcount(dom[v]);
                        if (pick == -1 || (mrv && size < pick_size)) {
                            pick = v;
                            pick_size = size;
                        }
                    }
                if (count + reachable <= best)
                    return;
                if (pick == -1) {
                    if (accept(val)) {
                        best = count;
                        best_assignment = val;
                    }
                    return;
                }

                auto options = dom[pick];
                if (dynamic)
                    options &= dynamic(val, pick) | Mask{ 1 };
                auto nonzero = options & ~Mask{ 1 };
                while (nonzero) {
                    int x = std::countr_zero(nonzero);
                    nonzero &= nonzero - 1;
                    if (auto next = propagate(val, dom, pick, x)) {
                        val[pick] = x;
                        search(val, *next, count + 1);
                        val[pick] = -1;
                    }
                }
                if (options & 1) {
                    if (auto next = propagate(val, dom, pick, 0)) {
                        val[pick] = 0;
                        search(val, *next, count);
                        val[pick] = -1;
                    }
                }
            }

            auto propagate(const Assignment & val, const std::vector<Mask> & dom, int var, int x)
                -> std::optional<std::vector<Mask>>
            {
                auto next = dom;
                if (x == 0)
                    return next;
                for (int w = 0 ; w < static_cast<int>(val.size()) ; ++w)
                    if (val[w] == -1 && w != var) {
                        next[w] &= compat[adjacent[var][w] ? 1 : 0][x];
                        if (next[w] == 0)
                            return std::nullopt;
                    }
                return next;
            }
    };
}

#endif
