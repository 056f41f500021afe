#ifndef EHF_GENERATORS_HH
#define EHF_GENERATORS_HH

#include <ehf/detectors.hh>
#include <ehf/graph.hh>
#include <ehf/strips.hh>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace ehf
{
    /// One tree per isomorphism class with the given number of edges, by
    /// canonical enumeration of forests.
    auto unlabelled_trees(int edges) -> std::vector<Tree>;

    /// Uniform labelled tree on n ≥ 2 vertices from a random Prüfer sequence.
    auto random_tree(int n, std::mt19937_64 & rng) -> Tree;

    /// H(T) for every tree with 3..max_edges edges (up to isomorphism) and each
    /// of its two proper 2-colourings that satisfies the bipartition condition.
    auto extended_tree_family(int max_edges) -> std::vector<ExtendedTreeLineGraph>;

    /// Every (tree, colouring) pair tried by extended_tree_family, valid or not.
    struct TreeColouring
    {
        Tree tree;
        std::vector<int> side;
    };

    auto tree_colourings(int max_edges) -> std::vector<TreeColouring>;

    struct PyramidInstance
    {
        Graph graph;
        PyramidCertificate pyramid;   ///< apex 0, path i numbered consecutively
    };

    /// A pyramid with the given path lengths (each at least one, at most one equal to one).
    auto pyramid_instance(std::array<int, 3> lengths) -> PyramidInstance;

    /// Random graph with every edge present with probability 1/2, from raw generator bits.
    auto random_graph(int n, std::mt19937_64 & rng) -> Graph;

    /// Seed for instance `index` of a sampled run, independent of how the run is split up.
    auto instance_seed(std::uint64_t seed, std::uint64_t index) -> std::uint64_t;
}

#endif
