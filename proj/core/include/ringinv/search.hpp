#pragma once

#include "ringinv/laws.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ringinv {

enum class Law {
    sided_products,
    absorption_one_sided,
    absorption,
    absorption_cross,
    absorption_group,
    absorption_drazin,
    absorption_mp,
    absorption_mixed,
    commutation,
    reverse_order,
    reverse_order_commuting,
    shift_invariance,
    jacobson,
    along_sigma_criterion,
};

struct LawInfo {
    Law law;
    std::string_view id;
    std::size_t arity;  // number of element inputs, sigma excluded
    bool uses_sigma;
    std::vector<Hypothesis> droppable;
};

const std::vector<LawInfo>& law_catalog();
const LawInfo& law_info(Law law);
std::optional<Law> parse_law(std::string_view id);

/// Dispatches to the matching check_* function. inputs.size() must equal the
/// law's arity (std::invalid_argument otherwise); sigma is ignored by laws
/// that do not use one.
LawReport check_law(Law law, std::span<const Element> inputs, const CentralizerMap& sigma,
                    const HypothesisSet& dropped = {});

/// The tuples a law is evaluated on: every arity-tuple of `elements` in
/// lexicographic order (first input most significant), crossed with `sigmas`
/// as the least significant coordinate.
struct Universe {
    std::vector<Element> elements;
    std::vector<CentralizerMap> sigmas;
};

/// Z_n: all residues, and sigma(x) = c x for every unit c (every c when
/// sigma-bijective is dropped). Matrix rings need a candidate list; their
/// sigmas are the identity plus the central candidates (units only unless
/// sigma-bijective is dropped). Throws NotFinite for a matrix ring without
/// candidates.
Universe make_universe(const RingContext& ring, const HypothesisSet& dropped = {},
                       const std::optional<std::vector<Element>>& candidates = std::nullopt);

struct RunOptions {
    /// 0: RINGINV_THREADS if set, otherwise std::thread::hardware_concurrency().
    std::size_t threads = 0;
    /// Stop collecting reports after this many (0 = no limit). Counts are unaffected.
    std::size_t max_reports = 0;
};

std::size_t resolve_thread_count(std::size_t requested);

struct VerifySummary {
    std::size_t tuples = 0;
    std::size_t holds = 0;
    std::size_t violated = 0;
    std::size_t hypotheses_unmet = 0;
    std::vector<LawReport> violations;  // lexicographic order

    bool all_hold() const noexcept { return violated == 0; }
};

/// Checks the law on every tuple of the universe.
VerifySummary verify_exhaustive(Law law, const Universe& universe, const HypothesisSet& dropped = {},
                                const RunOptions& options = {});

/// Tuples whose verdict is `violated` with the given hypotheses dropped, in
/// lexicographic order; the first hit comes first.
std::vector<LawReport> search_counterexamples(Law law, const Universe& universe, const HypothesisSet& dropped,
                                              const RunOptions& options = {});

/// Convenience overload building the universe with make_universe.
std::vector<LawReport> search_counterexamples(const RingContext& ring, Law law, const HypothesisSet& dropped,
                                              const std::optional<std::vector<Element>>& candidates = std::nullopt,
                                              const RunOptions& options = {});

}  // namespace ringinv
