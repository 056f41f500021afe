#ifndef EHF_VERTEX_SET_HH
#define EHF_VERTEX_SET_HH

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#ifndef EHF_MAX_VERTICES
#define EHF_MAX_VERTICES 64
#endif

namespace ehf
{
    using Vertex = int;

    inline constexpr int max_vertices = EHF_MAX_VERTICES;

    static_assert(max_vertices % 64 == 0 && max_vertices >= 64 && max_vertices <= 256,
            "EHF_MAX_VERTICES must be 64, 128, 192 or 256");

    /**
     * A subset of {0, ..., max_vertices - 1}, stored as a fixed number of
     * machine words. With the default profile this is a single word, and all
     * the loops below collapse.
     */
    class VertexSet
    {
        public:
            static constexpr int n_words = max_vertices / 64;

        private:
            std::array<std::uint64_t, n_words> _words{};

        public:
            constexpr VertexSet() = default;

            VertexSet(std::initializer_list<Vertex> vs)
            {
                for (auto v : vs)
                    set(v);
            }

            static auto range(int n) -> VertexSet
            {
                VertexSet result;
                for (int w = 0 ; w < n_words ; ++w) {
                    int lo = w * 64;
                    if (n >= lo + 64)
                        result._words[w] = ~std::uint64_t{0};
                    else if (n > lo)
                        result._words[w] = (std::uint64_t{1} << (n - lo)) - 1;
                }
                return result;
            }

            static auto from_word(std::uint64_t word) -> VertexSet
            {
                VertexSet result;
                result._words[0] = word;
                return result;
            }

            auto word(int w = 0) const -> std::uint64_t
            {
                return _words[w];
            }

            auto set(Vertex v) -> void
            {
                _words[v >> 6] |= std::uint64_t{1} << (v & 63);
            }

            auto reset(Vertex v) -> void
            {
                _words[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            }

            auto toggle(Vertex v) -> void
            {
                _words[v >> 6] ^= std::uint64_t{1} << (v & 63);
            }

            auto test(Vertex v) const -> bool
            {
                return (_words[v >> 6] >> (v & 63)) & 1;
            }

            auto contains(Vertex v) const -> bool
            {
                return v >= 0 && v < max_vertices && test(v);
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool
            {
                return ! empty();
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            /// Smallest member, or -1 when empty.
            auto first() const -> Vertex
            {
                for (int w = 0 ; w < n_words ; ++w)
                    if (_words[w])
                        return w * 64 + std::countr_zero(_words[w]);
                return -1;
            }

            /// Smallest member strictly greater than v, or -1.
            auto next(Vertex v) const -> Vertex
            {
                int start = v + 1;
                if (start >= max_vertices)
                    return -1;
                int w = start >> 6;
                std::uint64_t cur = _words[w] & (~std::uint64_t{0} << (start & 63));
                while (true) {
                    if (cur)
                        return w * 64 + std::countr_zero(cur);
                    if (++w >= n_words)
                        return -1;
                    cur = _words[w];
                }
            }

            auto intersects(const VertexSet & o) const -> bool
            {
                for (int w = 0 ; w < n_words ; ++w)
                    if (_words[w] & o._words[w])
                        return true;
                return false;
            }

            auto is_subset_of(const VertexSet & o) const -> bool
            {
                for (int w = 0 ; w < n_words ; ++w)
                    if (_words[w] & ~o._words[w])
                        return false;
                return true;
            }

            auto operator|=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < n_words ; ++w)
                    _words[w] |= o._words[w];
                return *this;
            }

            auto operator&=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < n_words ; ++w)
                    _words[w] &= o._words[w];
                return *this;
            }

            /// Set difference.
            auto operator-=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < n_words ; ++w)
                    _words[w] &= ~o._words[w];
                return *this;
            }

            auto operator^=(const VertexSet & o) -> VertexSet &
            {
                for (int w = 0 ; w < n_words ; ++w)
                    _words[w] ^= o._words[w];
                return *this;
            }

            friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
            friend auto operator^(VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }

            auto with(Vertex v) const -> VertexSet
            {
                auto r = *this;
                r.set(v);
                return r;
            }

            auto without(Vertex v) const -> VertexSet
            {
                auto r = *this;
                r.reset(v);
                return r;
            }

            friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

            friend auto operator<(const VertexSet & a, const VertexSet & b) -> bool
            {
                for (int w = n_words - 1 ; w >= 0 ; --w)
                    if (a._words[w] != b._words[w])
                        return a._words[w] < b._words[w];
                return false;
            }

            auto to_vector() const -> std::vector<Vertex>
            {
                std::vector<Vertex> result;
                result.reserve(count());
                for (int w = 0 ; w < n_words ; ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        result.push_back(w * 64 + std::countr_zero(bits));
                        bits &= bits - 1;
                    }
                }
                return result;
            }

            static auto from(const std::vector<Vertex> & vs) -> VertexSet
            {
                VertexSet result;
                for (auto v : vs)
                    result.set(v);
                return result;
            }

            /// Calls f(v) for each member in increasing order.
            template <typename F_>
            auto for_each(F_ && f) const -> void
            {
                for (int w = 0 ; w < n_words ; ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        f(w * 64 + std::countr_zero(bits));
                        bits &= bits - 1;
                    }
                }
            }
    };

    auto to_string(const VertexSet &) -> std::string;
}

#endif
