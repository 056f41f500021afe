#ifndef EHF_HARNESS_HH
#define EHF_HARNESS_HH

#include <ehf/detectors.hh>
#include <ehf/graph.hh>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ehf
{
    enum class EnumerationMode
    {
        AllLabeled,
        CanonicalOnly,
        RandomSample
    };

    enum class GraphFilter
    {
        None,
        EvenHoleFree,
        Connected
    };

    auto to_string(EnumerationMode) -> std::string;
    auto to_string(GraphFilter) -> std::string;

    /// Inverse of to_string; throws GraphError on unknown names.
    auto parse_mode(const std::string &) -> EnumerationMode;
    auto parse_filter(const std::string &) -> GraphFilter;

    /**
     * Which instances a run covers. For graph enumeration every size from
     * min_n (0 meaning n) to n is visited. For the generated families n
     * bounds the generator instead: tree edges for the H(T) family, path
     * length for the pyramid family.
     */
    struct EnumerationSpec
    {
        int n = 0;
        int min_n = 0;
        EnumerationMode mode = EnumerationMode::CanonicalOnly;
        std::uint64_t count = 0;   ///< RandomSample only
        std::uint64_t seed = 1;    ///< RandomSample only
        GraphFilter filter = GraphFilter::None;
    };

    inline constexpr int max_labeled_n = 7;
    inline constexpr int max_canonical_n = 10;

    /// Throws GraphError when the request exceeds the enumeration bounds. The
    /// visitor returns false to stop.
    auto enumerate_graphs(const EnumerationSpec & spec, const std::function<bool (const Graph &)> & visit) -> void;

    enum class SuiteId
    {
        Subgraphs,
        Main,
        HtEhf,
        GetLocal,
        TreeStruct,
        SkewPyr,
        MajorClique,
        Funnies,
        SplendidPrism,
        PyrStrip,
        GrowStrips,
        GetClique,
        Trichotomy,
        StripToBip
    };

    auto all_suites() -> std::vector<SuiteId>;
    auto to_string(SuiteId) -> std::string;      ///< upper-case id, e.g. "SUBGRAPHS"
    auto parse_suite(const std::string &) -> SuiteId;

    /// The enumeration a suite runs with when only n is given.
    auto default_spec(SuiteId suite, std::optional<int> n = std::nullopt) -> EnumerationSpec;

    struct Violation
    {
        std::string graph;     ///< graph6
        std::string witness;
        bool caveat = false;   ///< obtained against a system not certified optimal
        std::string detail;

        friend auto operator==(const Violation &, const Violation &) -> bool = default;
    };

    struct VerificationReport
    {
        std::string suite;
        EnumerationSpec spec;
        std::uint64_t instances_tested = 0;
        std::uint64_t inapplicable = 0;
        std::uint64_t passes = 0;
        std::uint64_t fails = 0;
        std::uint64_t budget_hits = 0;
        std::vector<Violation> violations;       ///< the first max_violations, in instance order
        std::map<std::string, std::uint64_t> counters;
        double wall_seconds = 0;

        /// Fails without a caveat: the falsification alarm.
        auto caveat_free_fails() const -> std::uint64_t;

        auto accounting_holds() const -> bool
        {
            return instances_tested == inapplicable + passes + fails + budget_hits;
        }
    };

    struct SuiteOptions
    {
        unsigned jobs = 1;
        Budget budget = Budget::nodes(2'000'000);
        bool probe_certificates = false;   ///< toggle every pair inside each certificate's span
        std::size_t max_violations = 100;
    };

    /// Throws GraphError when the enumeration is out of the suite's bounds.
    auto run_suite(SuiteId suite, const EnumerationSpec & spec, const SuiteOptions & options = {}) -> VerificationReport;

    /// Sorted keys; `timing` false drops wall_seconds so reruns compare byte for byte.
    auto report_json(const VerificationReport & r, int indent = -1, bool timing = true) -> std::string;

    auto report_table(const VerificationReport & r) -> std::string;

    struct ProbeResult
    {
        std::uint64_t probes = 0;
        std::uint64_t caught = 0;
    };

    /// Toggles each pair of vertices of the certificate's span in turn and
    /// counts how many of the mutated graphs verify_certificate rejects.
    auto probe_certificate(const Graph & g, const Certificate & c) -> ProbeResult;
}

#endif
