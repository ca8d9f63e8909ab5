#include "ringinv/search.hpp"

#include "ringinv/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace ringinv {

const std::vector<LawInfo>& law_catalog() {
    using H = Hypothesis;
    static const std::vector<LawInfo> catalog = {
        {Law::sided_products, "sided-products", 3, false, {}},
        {Law::absorption_one_sided, "absorption-one-sided", 3, false, {}},
        {Law::absorption, "absorption", 3, false, {}},
        {Law::absorption_cross, "absorption-cross", 4, true, {H::d1_eq_sigma_d2, H::sigma_bijective}},
        {Law::absorption_group, "absorption-group", 2, true, {H::a_eq_sigma_b, H::sigma_bijective}},
        {Law::absorption_drazin, "absorption-drazin", 2, true, {H::an_eq_sigma_bm, H::sigma_bijective}},
        {Law::absorption_mp, "absorption-mp", 2, true, {H::astar_eq_sigma_bstar, H::sigma_bijective}},
        {Law::absorption_mixed, "absorption-mixed", 2, true, {H::a_eq_sigma_bstar, H::sigma_bijective}},
        {Law::commutation, "commutation", 2, true, {H::ad_eq_sigma_da, H::sigma_bijective}},
        {Law::reverse_order, "reverse-order", 3, true, {H::ad_eq_sigma_da, H::sigma_bijective}},
        {Law::reverse_order_commuting, "reverse-order-commuting", 3, false, {H::ad_eq_sigma_da}},
        {Law::shift_invariance, "shift-invariance", 2, true, {H::sigma_bijective}},
        {Law::jacobson, "jacobson", 2, false, {}},
        {Law::along_sigma_criterion, "along-sigma-criterion", 2, true, {H::sigma_bijective}},
    };
    return catalog;
}

const LawInfo& law_info(Law law) {
    for (const auto& info : law_catalog()) {
        if (info.law == law) {
            return info;
        }
    }
    throw std::logic_error("law missing from catalog");
}

std::optional<Law> parse_law(std::string_view id) {
    for (const auto& info : law_catalog()) {
        if (info.id == id) {
            return info.law;
        }
    }
    return std::nullopt;
}

LawReport check_law(Law law, std::span<const Element> in, const CentralizerMap& sigma,
                    const HypothesisSet& dropped) {
    const LawInfo& info = law_info(law);
    if (in.size() != info.arity) {
        throw std::invalid_argument(std::string(info.id) + " takes " + std::to_string(info.arity) +
                                    " inputs, got " + std::to_string(in.size()));
    }
    switch (law) {
        case Law::sided_products: return check_sided_products(in[0], in[1], in[2]);
        case Law::absorption_one_sided: return check_absorption_one_sided(in[0], in[1], in[2]);
        case Law::absorption: return check_absorption(in[0], in[1], in[2]);
        case Law::absorption_cross: return check_absorption_cross(in[0], in[1], in[2], in[3], sigma, dropped);
        case Law::absorption_group:
            return check_absorption_preset(AbsorptionPreset::group, in[0], in[1], sigma, dropped);
        case Law::absorption_drazin:
            return check_absorption_preset(AbsorptionPreset::drazin, in[0], in[1], sigma, dropped);
        case Law::absorption_mp:
            return check_absorption_preset(AbsorptionPreset::moore_penrose, in[0], in[1], sigma, dropped);
        case Law::absorption_mixed:
            return check_absorption_preset(AbsorptionPreset::mixed, in[0], in[1], sigma, dropped);
        case Law::commutation: return check_commutation(in[0], in[1], sigma, dropped);
        case Law::reverse_order: return check_reverse_order(in[0], in[1], in[2], sigma, dropped);
        case Law::reverse_order_commuting: {
            LawReport r = check_reverse_order(in[0], in[1], in[2], CentralizerMap::identity(in[0].ring()), dropped);
            r.law = "reverse-order-commuting";
            r.sigma.reset();
            return r;
        }
        case Law::shift_invariance: return check_shift_invariance(in[0], in[1], sigma, dropped);
        case Law::jacobson: return check_jacobson(in[0], in[1]);
        case Law::along_sigma_criterion: return check_along_sigma_criterion(in[0], in[1], sigma, dropped);
    }
    throw std::logic_error("unhandled law");
}

Universe make_universe(const RingContext& ring, const HypothesisSet& dropped,
                       const std::optional<std::vector<Element>>& candidates) {
    const bool any_sigma = dropped.count(Hypothesis::sigma_bijective) > 0;
    Universe u;
    if (candidates) {
        for (const auto& c : *candidates) {
            if (c.ring() != ring) {
                throw RingMismatch("candidate from " + c.ring().spec() + " for ring " + ring.spec());
            }
        }
        u.elements = *candidates;
    } else {
        u.elements = enumerate(ring);
    }

    if (ring.is_finite()) {
        for (const auto& c : enumerate(ring)) {
            if (any_sigma || is_unit(c)) {
                u.sigmas.push_back(CentralizerMap::scaling(c));
            }
        }
        return u;
    }
    u.sigmas.push_back(CentralizerMap::identity(ring));
    for (const auto& c : u.elements) {
        const bool seen = std::any_of(u.sigmas.begin(), u.sigmas.end(),
                                      [&](const CentralizerMap& s) { return s.scaling_element() == c; });
        if (!seen && is_central(c) && (any_sigma || is_unit(c))) {
            u.sigmas.push_back(CentralizerMap::scaling(c));
        }
    }
    return u;
}

std::size_t resolve_thread_count(std::size_t requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("RINGINV_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

struct Partial {
    VerifySummary summary;
    std::exception_ptr error;
};

std::size_t tuple_count(std::size_t elements, std::size_t arity, std::size_t sigmas) {
    std::size_t total = sigmas;
    for (std::size_t i = 0; i < arity; ++i) {
        if (elements != 0 && total > static_cast<std::size_t>(-1) / elements) {
            throw std::overflow_error("tuple space too large to enumerate");
        }
        total *= elements;
    }
    return total;
}

void run_block(Law law, const LawInfo& info, const Universe& universe, const HypothesisSet& dropped,
               std::size_t begin, std::size_t end, std::size_t sigma_count, std::size_t max_reports, Partial& out) {
    try {
        std::vector<Element> inputs;
        inputs.reserve(info.arity);
        const std::size_t n = universe.elements.size();
        for (std::size_t t = begin; t < end; ++t) {
            const std::size_t sigma_index = t % sigma_count;
            std::size_t rest = t / sigma_count;
            inputs.assign(info.arity, universe.elements.front());
            for (std::size_t i = info.arity; i-- > 0;) {
                inputs[i] = universe.elements[rest % n];
                rest /= n;
            }
            const CentralizerMap& sigma = info.uses_sigma ? universe.sigmas[sigma_index]
                                                          : universe.sigmas.front();
            LawReport report = check_law(law, inputs, sigma, dropped);
            ++out.summary.tuples;
            switch (report.verdict) {
                case Verdict::holds: ++out.summary.holds; break;
                case Verdict::hypotheses_unmet: ++out.summary.hypotheses_unmet; break;
                case Verdict::violated:
                    ++out.summary.violated;
                    if (max_reports == 0 || out.summary.violations.size() < max_reports) {
                        out.summary.violations.push_back(std::move(report));
                    }
                    break;
            }
        }
    } catch (...) {
        out.error = std::current_exception();
    }
}

}  // namespace

VerifySummary verify_exhaustive(Law law, const Universe& universe, const HypothesisSet& dropped,
                                const RunOptions& options) {
    const LawInfo& info = law_info(law);
    VerifySummary total;
    if (universe.elements.empty() || universe.sigmas.empty()) {
        return total;
    }
    const std::size_t sigma_count = info.uses_sigma ? universe.sigmas.size() : 1;
    const std::size_t count = tuple_count(universe.elements.size(), info.arity, sigma_count);

    const std::size_t threads = std::min(resolve_thread_count(options.threads), std::max<std::size_t>(count, 1));
    std::vector<Partial> partials(threads);
    const std::size_t block = (count + threads - 1) / threads;

    if (threads == 1) {
        run_block(law, info, universe, dropped, 0, count, sigma_count, options.max_reports, partials[0]);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            const std::size_t begin = std::min(count, w * block);
            const std::size_t end = std::min(count, begin + block);
            workers.emplace_back([&, w, begin, end] {
                run_block(law, info, universe, dropped, begin, end, sigma_count, options.max_reports, partials[w]);
            });
        }
    }

    // Blocks are contiguous, so concatenation restores lexicographic order.
    for (auto& p : partials) {
        if (p.error) {
            std::rethrow_exception(p.error);
        }
        total.tuples += p.summary.tuples;
        total.holds += p.summary.holds;
        total.violated += p.summary.violated;
        total.hypotheses_unmet += p.summary.hypotheses_unmet;
        for (auto& r : p.summary.violations) {
            if (options.max_reports == 0 || total.violations.size() < options.max_reports) {
                total.violations.push_back(std::move(r));
            }
        }
    }
    return total;
}

std::vector<LawReport> search_counterexamples(Law law, const Universe& universe, const HypothesisSet& dropped,
                                              const RunOptions& options) {
    return verify_exhaustive(law, universe, dropped, options).violations;
}

std::vector<LawReport> search_counterexamples(const RingContext& ring, Law law, const HypothesisSet& dropped,
                                              const std::optional<std::vector<Element>>& candidates,
                                              const RunOptions& options) {
    return search_counterexamples(law, make_universe(ring, dropped, candidates), dropped, options);
}

}  // namespace ringinv
