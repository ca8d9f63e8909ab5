#include "ringinv_cli/cli.hpp"

#include "ringinv/along.hpp"
#include "ringinv/centralizer.hpp"
#include "ringinv/classical.hpp"
#include "ringinv/errors.hpp"
#include "ringinv/laws.hpp"
#include "ringinv/literal.hpp"
#include "ringinv/regular.hpp"
#include "ringinv/ring.hpp"
#include "ringinv/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringinv::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string lit(const Element& e) { return format_element(e); }

json opt_lit(const std::optional<Element>& e) { return e ? json(lit(*e)) : json(nullptr); }

json report_json(const LawReport& r) {
    json inputs = json::array();
    for (const auto& x : r.inputs) {
        inputs.push_back(lit(x));
    }
    return json{{"law", r.law},
                {"inputs", std::move(inputs)},
                {"sigma", opt_lit(r.sigma)},
                {"hypotheses_met", r.hypotheses_met},
                {"lhs", opt_lit(r.lhs)},
                {"rhs", opt_lit(r.rhs)},
                {"verdict", std::string(to_string(r.verdict))},
                {"certificate", r.certificate}};
}

std::string report_line(const LawReport& r) {
    std::ostringstream os;
    os << to_string(r.verdict) << ' ' << r.law << " (";
    for (std::size_t i = 0; i < r.inputs.size(); ++i) {
        os << (i ? ", " : "") << lit(r.inputs[i]);
    }
    os << ')';
    if (r.sigma) {
        os << " sigma=" << lit(*r.sigma);
    }
    if (r.lhs && r.rhs) {
        os << " lhs=" << lit(*r.lhs) << " rhs=" << lit(*r.rhs);
    }
    if (!r.certificate.empty()) {
        os << ": " << r.certificate;
    }
    return os.str();
}

// Element literals inside JSON may be strings, or plain integers for Z_n.
Element element_from_json(const RingContext& ring, const json& j) {
    if (j.is_string()) {
        return parse_element(ring, j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return parse_element(ring, j.dump());
    }
    throw UsageError("element literal expected, got " + j.dump());
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(what + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open " + path);
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Element> read_candidates(const RingContext& ring, const std::string& path) {
    const json j = parse_json_text(read_file(path), path);
    if (!j.is_array()) {
        throw UsageError(path + ": expected a JSON array of element literals");
    }
    std::vector<Element> out;
    for (const auto& item : j) {
        out.push_back(element_from_json(ring, item));
    }
    return out;
}

// --inputs takes inline JSON or a path: one tuple, or an array of tuples.
std::vector<std::vector<Element>> read_input_tuples(const RingContext& ring, const std::string& arg) {
    const bool inline_json = !arg.empty() && arg.front() == '[';
    const json j = parse_json_text(inline_json ? arg : read_file(arg), "--inputs");
    if (!j.is_array() || j.empty()) {
        throw UsageError("--inputs: expected a non-empty JSON array");
    }
    std::vector<std::vector<Element>> tuples;
    const bool nested = std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_array(); });
    if (nested) {
        for (const auto& t : j) {
            std::vector<Element> tuple;
            for (const auto& x : t) {
                tuple.push_back(element_from_json(ring, x));
            }
            tuples.push_back(std::move(tuple));
        }
    } else {
        std::vector<Element> tuple;
        for (const auto& x : j) {
            tuple.push_back(element_from_json(ring, x));
        }
        tuples.push_back(std::move(tuple));
    }
    return tuples;
}

HypothesisSet parse_dropped(const std::vector<std::string>& names) {
    HypothesisSet out;
    for (const auto& n : names) {
        auto h = parse_hypothesis(n);
        if (!h) {
            throw UsageError("unknown hypothesis: " + n);
        }
        out.insert(*h);
    }
    return out;
}

Law require_law(const std::string& id) {
    auto law = parse_law(id);
    if (!law) {
        throw UsageError("unknown law: " + id + " (see `ringinv laws`)");
    }
    return *law;
}

json dropped_json(const HypothesisSet& dropped) {
    json out = json::array();
    for (auto h : dropped) {
        out.push_back(std::string(to_string(h)));
    }
    return out;
}

// compute

struct ComputeArgs {
    std::string ring, op, a, d, b, sigma, d_inner;
    bool json = false;
    bool bypass = false;
};

const std::vector<std::string> compute_ops = {
    "invert-along", "along-definition", "sided-left", "sided-right", "group",   "drazin",
    "moore-penrose", "mp-left",         "mp-right",   "inner",       "unit-inverse", "penrose",
};

class ComputeRun {
public:
    ComputeRun(const ComputeArgs& args, std::ostream& out)
        : args_(args), out_(out), ring_(parse_ring_spec(args.ring)), a_(parse_element(ring_, args.a)) {
        doc_["ring"] = ring_.spec();
        doc_["op"] = args.op;
        doc_["a"] = lit(a_);
        if (!args.d.empty()) {
            d_ = parse_element(ring_, args.d);
            doc_["d"] = lit(*d_);
        }
        if (!args.sigma.empty()) {
            sigma_ = CentralizerMap::scaling(parse_element(ring_, args.sigma));
            doc_["sigma"] = lit(sigma_->scaling_element());
        }
    }

    int operator()() {
        const std::string& op = args_.op;
        if (op == "invert-along") return invert_along_op();
        if (op == "along-definition") return finish(inverse_along_by_definition(a_, need_d()));
        if (op == "sided-left") return sided(Side::left);
        if (op == "sided-right") return sided(Side::right);
        if (op == "group") return finish(group_inverse(a_, sigma_));
        if (op == "drazin") return drazin();
        if (op == "moore-penrose") return finish(moore_penrose(a_, sigma_));
        if (op == "mp-left") return finish(mp_one_sided(a_, Side::left, sigma_));
        if (op == "mp-right") return finish(mp_one_sided(a_, Side::right, sigma_));
        if (op == "inner") return finish(try_inner_inverse(a_));
        if (op == "unit-inverse") {
            auto inv = try_unit_inverse(a_);
            return inv ? finish(Outcome<Element>(*inv)) : absent("not-a-unit");
        }
        if (op == "penrose") return penrose();
        throw UsageError("unknown op: " + op);
    }

private:
    const Element& need_d() {
        if (!d_) {
            throw UsageError("--op " + args_.op + " requires --d");
        }
        return *d_;
    }

    std::optional<Element> d_inner() const {
        if (args_.d_inner.empty()) {
            return std::nullopt;
        }
        return parse_element(ring_, args_.d_inner);
    }

    int invert_along_op() {
        const Element& d = need_d();
        const auto inner = d_inner();
        Outcome<AlongInverseResult> r = Absent{AbsentReason::not_regular};
        if (sigma_) {
            const SigmaGuard guard = args_.bypass ? SigmaGuard::bypass : SigmaGuard::enforce;
            r = inner ? invert_along_sigma(a_, d, *sigma_, *inner, guard) : invert_along_sigma(a_, d, *sigma_, guard);
        } else {
            r = inner ? invert_along(a_, d, *inner) : invert_along(a_, d);
        }
        if (!r) {
            return absent(to_string(r.reason()));
        }
        doc_["exists"] = true;
        doc_["b"] = lit(r->b);
        doc_["u"] = lit(r->u);
        doc_["u_inv"] = lit(r->u_inv);
        doc_["v"] = lit(r->v);
        doc_["v_inv"] = lit(r->v_inv);
        doc_["left_witness"] = lit(r->left_witness);
        doc_["right_witness"] = lit(r->right_witness);
        doc_["d_inner"] = lit(r->d_inner);
        return emit(lit(r->b));
    }

    int sided(Side side) {
        auto r = sided_inverse_along(a_, need_d(), side);
        if (!r) {
            return absent(to_string(r.reason()));
        }
        doc_["exists"] = true;
        doc_["b"] = lit(r->b);
        doc_["witness"] = lit(r->witness);
        return emit(lit(r->b));
    }

    int drazin() {
        auto r = drazin_inverse(a_, sigma_);
        if (!r) {
            return absent(to_string(r.reason()));
        }
        doc_["exists"] = true;
        doc_["b"] = lit(r->b);
        doc_["index"] = r->index;
        doc_["n"] = r->n_used;
        return emit(lit(r->b) + " index=" + std::to_string(r->index));
    }

    int penrose() {
        if (args_.b.empty()) {
            throw UsageError("--op penrose requires --b");
        }
        const Element b = parse_element(ring_, args_.b);
        const PenroseProfile p = penrose_check(a_, b);
        doc_["b"] = lit(b);
        doc_["equations"] = p.to_string();
        doc_["moore_penrose"] = p.is_moore_penrose();
        return emit(p.to_string());
    }

    int finish(const Outcome<Element>& r) {
        if (!r) {
            return absent(to_string(r.reason()));
        }
        doc_["exists"] = true;
        doc_["b"] = lit(*r);
        return emit(lit(*r));
    }

    int absent(std::string_view reason) {
        doc_["exists"] = false;
        doc_["reason"] = std::string(reason);
        emit("none (" + std::string(reason) + ")");
        return violation;
    }

    int emit(const std::string& text) {
        if (args_.json) {
            out_ << doc_.dump(2) << '\n';
        } else {
            out_ << text << '\n';
        }
        return ok;
    }

    const ComputeArgs& args_;
    std::ostream& out_;
    RingContext ring_;
    Element a_;
    std::optional<Element> d_;
    OptionalSigma sigma_;
    json doc_;
};

// verify / search

struct LawArgs {
    std::string ring, law, inputs, sigma, candidates;
    std::vector<std::string> drop;
    bool exhaustive = false;
    bool json = false;
    std::size_t threads = 0;
    std::size_t limit = 20;
};

Universe law_universe(const RingContext& ring, const LawArgs& args, const HypothesisSet& dropped) {
    std::optional<std::vector<Element>> candidates;
    if (!args.candidates.empty()) {
        candidates = read_candidates(ring, args.candidates);
    }
    if (!ring.is_finite() && !candidates) {
        throw UsageError(ring.spec() + " is infinite; pass --candidates <file>");
    }
    Universe u = make_universe(ring, dropped, candidates);
    if (!args.sigma.empty()) {
        u.sigmas = {CentralizerMap::scaling(parse_element(ring, args.sigma))};
    }
    return u;
}

json summary_json(const RingContext& ring, const LawArgs& args, const HypothesisSet& dropped,
                  const VerifySummary& s, std::string_view mode) {
    json reports = json::array();
    for (const auto& r : s.violations) {
        reports.push_back(report_json(r));
    }
    return json{{"ring", ring.spec()},
                {"law", args.law},
                {"mode", std::string(mode)},
                {"dropped", dropped_json(dropped)},
                {"tuples", s.tuples},
                {"holds", s.holds},
                {"violated", s.violated},
                {"hypotheses_unmet", s.hypotheses_unmet},
                {"reports", std::move(reports)}};
}

void summary_text(std::ostream& out, const RingContext& ring, const LawArgs& args, const VerifySummary& s) {
    for (const auto& r : s.violations) {
        out << report_line(r) << '\n';
    }
    out << args.law << " on " << ring.spec() << ": " << s.tuples << " tuples, " << s.holds << " holds, "
        << s.violated << " violated, " << s.hypotheses_unmet << " hypotheses-unmet\n";
}

int verify_inputs(const RingContext& ring, Law law, const LawArgs& args, const HypothesisSet& dropped,
                  std::ostream& out) {
    const CentralizerMap sigma = args.sigma.empty() ? CentralizerMap::identity(ring)
                                                    : CentralizerMap::scaling(parse_element(ring, args.sigma));
    VerifySummary s;
    for (const auto& tuple : read_input_tuples(ring, args.inputs)) {
        LawReport r = check_law(law, tuple, sigma, dropped);
        ++s.tuples;
        switch (r.verdict) {
            case Verdict::holds: ++s.holds; break;
            case Verdict::violated: ++s.violated; break;
            case Verdict::hypotheses_unmet: ++s.hypotheses_unmet; break;
        }
        s.violations.push_back(std::move(r));  // every report is shown in this mode
    }
    if (args.json) {
        out << summary_json(ring, args, dropped, s, "inputs").dump(2) << '\n';
    } else {
        for (const auto& r : s.violations) {
            out << report_line(r) << '\n';
        }
    }
    return s.all_hold() ? ok : violation;
}

int verify(const LawArgs& args, std::ostream& out) {
    const RingContext ring = parse_ring_spec(args.ring);
    const Law law = require_law(args.law);
    const HypothesisSet dropped = parse_dropped(args.drop);
    if (args.exhaustive == !args.inputs.empty()) {
        throw UsageError("verify needs exactly one of --exhaustive and --inputs");
    }
    if (!args.inputs.empty()) {
        return verify_inputs(ring, law, args, dropped, out);
    }
    const Universe u = law_universe(ring, args, dropped);
    const VerifySummary s = verify_exhaustive(law, u, dropped, RunOptions{args.threads, args.limit});
    if (args.json) {
        out << summary_json(ring, args, dropped, s, "exhaustive").dump(2) << '\n';
    } else {
        summary_text(out, ring, args, s);
    }
    return s.all_hold() ? ok : violation;
}

int search(const LawArgs& args, std::ostream& out) {
    const RingContext ring = parse_ring_spec(args.ring);
    const Law law = require_law(args.law);
    const HypothesisSet dropped = parse_dropped(args.drop);
    const Universe u = law_universe(ring, args, dropped);
    const VerifySummary s = verify_exhaustive(law, u, dropped, RunOptions{args.threads, args.limit});
    if (args.json) {
        out << summary_json(ring, args, dropped, s, "search").dump(2) << '\n';
    } else {
        summary_text(out, ring, args, s);
    }
    return s.all_hold() ? ok : violation;
}

int list_laws(std::ostream& out) {
    for (const auto& info : law_catalog()) {
        out << info.id << " arity=" << info.arity << (info.uses_sigma ? " sigma" : "");
        if (!info.droppable.empty()) {
            out << " drop:";
            for (std::size_t i = 0; i < info.droppable.size(); ++i) {
                out << (i ? "," : "") << to_string(info.droppable[i]);
            }
        }
        out << '\n';
    }
    return ok;
}

void add_law_options(CLI::App& cmd, LawArgs& a) {
    cmd.add_option("--ring", a.ring, "zmod:<n> or gqmat:<k>")->required();
    cmd.add_option("--law", a.law, "law id, see `ringinv laws`")->required();
    cmd.add_option("--sigma", a.sigma, "scaling element c of sigma(x) = c x");
    cmd.add_option("--drop", a.drop, "hypothesis to switch off (repeatable)");
    cmd.add_option("--candidates", a.candidates, "JSON array of element literals to enumerate over");
    cmd.add_option("--threads", a.threads, "worker threads (default: RINGINV_THREADS or all cores)");
    cmd.add_option("--limit", a.limit, "maximum reports to print, 0 = all");
    cmd.add_flag("--json", a.json, "JSON output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized inverses in Z/nZ and matrix rings over Q(i)", "ringinv"};
    app.require_subcommand(1);

    ComputeArgs c;
    auto* compute = app.add_subcommand("compute", "compute an inverse");
    compute->add_option("--ring", c.ring, "zmod:<n> or gqmat:<k>")->required();
    compute->add_option("--op", c.op, "operation")->required()->check(CLI::IsMember(compute_ops));
    compute->add_option("--a", c.a, "element a")->required();
    compute->add_option("--d", c.d, "element d");
    compute->add_option("--b", c.b, "candidate inverse for --op penrose");
    compute->add_option("--sigma", c.sigma, "scaling element c of sigma(x) = c x");
    compute->add_option("--d-inner", c.d_inner, "inner inverse of d to evaluate the criterion with");
    compute->add_flag("--bypass", c.bypass, "accept a non-bijective sigma (diagnostic)");
    compute->add_flag("--json", c.json, "JSON output");

    LawArgs v;
    auto* verify_cmd = app.add_subcommand("verify", "check a law on given or all inputs");
    add_law_options(*verify_cmd, v);
    verify_cmd->add_flag("--exhaustive", v.exhaustive, "every tuple of the ring (or of --candidates)");
    verify_cmd->add_option("--inputs", v.inputs, "JSON tuple, array of tuples, or a file holding either");

    LawArgs s;
    s.limit = 10;
    auto* search_cmd = app.add_subcommand("search", "look for counterexamples with hypotheses dropped");
    add_law_options(*search_cmd, s);
    search_cmd->get_option("--drop")->required();

    auto* laws_cmd = app.add_subcommand("laws", "list law ids");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*compute) return ComputeRun(c, out)();
        if (*verify_cmd) return verify(v, out);
        if (*search_cmd) return search(s, out);
        if (*laws_cmd) return list_laws(out);
    } catch (const InternalFormulaMismatch& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}

}  // namespace ringinv::cli
