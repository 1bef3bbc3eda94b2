#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sumlab/sumlab.hpp"

using namespace sumlab;
using io::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kFound = 1;
constexpr int kUsage = 2;
constexpr int kInvalid = 3;

struct Context {
    std::string out;
    bool timestamps = false;
    json inputs = json::object();
};

std::string read_text(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ParseError("cannot read input file '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string hex64(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

json load(Context& ctx, const std::string& key, const std::string& path) {
    const std::string text = read_text(path);
    ctx.inputs[key] = "fnv1a:" + hex64(rng::fnv1a(text));
    return io::parse_document(text);
}

// A point-set document, or a report whose result is one.
PointSet load_set(Context& ctx, const std::string& key, const std::string& path) {
    json j = load(ctx, key, path);
    if (j.is_object() && !j.contains("points") && j.contains("result")) {
        j = j.at("result");
    }
    return io::point_set_from_json(j);
}

IntVector parse_int_list(const std::string& text, const char* what) {
    IntVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational r = [&] {
            try {
                return parse_rational(item);
            } catch (const Error&) {
                throw ParseError(std::string(what) + ": bad entry '" + item + "'");
            }
        }();
        if (!is_integer(r)) {
            throw ParseError(std::string(what) + ": entries must be integers, got '" + item + "'");
        }
        out.push_back(numerator(r));
    }
    if (out.empty()) {
        throw ParseError(std::string(what) + ": empty list");
    }
    return out;
}

Direction parse_direction(const std::string& text) {
    try {
        return Direction(parse_int_list(text, "--direction"));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("--direction: ") + e.what());
    }
}

std::vector<int> parse_small_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (const auto& z : parse_int_list(text, what)) {
        if (z < -1000000 || z > 1000000) {
            throw ParseError(std::string(what) + ": entry out of range");
        }
        out.push_back(static_cast<int>(z));
    }
    return out;
}

std::string utc_now() {
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json envelope(const Context& ctx, const std::string& command, json result) {
    json j{{"command", command}, {"version", kVersion}, {"inputs", ctx.inputs}, {"result", std::move(result)}};
    if (ctx.timestamps) {
        j["generated_at"] = utc_now();
    }
    return j;
}

// Point-set outputs stay loadable as --input: the report goes under "meta".
json set_document(const Context& ctx, const std::string& command, const PointSet& a, json extra = json::object()) {
    json j = io::to_json(a);
    json meta{{"command", command}, {"version", kVersion}, {"inputs", ctx.inputs}, {"size", a.size()}};
    meta.update(extra);
    if (ctx.timestamps) {
        meta["generated_at"] = utc_now();
    }
    j["meta"] = std::move(meta);
    return j;
}

void write(const Context& ctx, const std::string& text) {
    if (ctx.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(ctx.out, std::ios::binary);
    if (!f) {
        throw ParseError("cannot write output file '" + ctx.out + "'");
    }
    f << text;
}

void write(const Context& ctx, const json& j) { write(ctx, j.dump(2) + "\n"); }

Integer parse_integer(const std::string& text, const char* what) {
    const Rational r = parse_rational(text);
    if (!is_integer(r)) {
        throw DomainError(std::string(what) + " must be an integer");
    }
    return numerator(r);
}

std::string csv_row(const ClaimReport& r) {
    auto get = [&](const char* k) {
        auto it = r.instance.find(k);
        return it == r.instance.end() ? std::string() : it->second;
    };
    return std::string(claim_name(r.claim)) + "," + get("d") + "," + get("n") + "," + to_string(r.lhs) + "," +
           to_string(r.rhs) + "," + to_string(r.margin) + "," + verdict_name(r.verdict) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sumlab: exact sumset and difference-set computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Context ctx;
    std::string input;
    std::string b_path;
    std::string direction;
    std::uint64_t seed = 0;
    unsigned threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", ctx.out, "write the report here instead of stdout");
        sub->add_flag("--timestamps", ctx.timestamps, "add a generation time to the report");
    };
    auto add_input = [&](CLI::App* sub, bool required) {
        auto* o = sub->add_option("--input", input, "point set A (JSON, '-' for stdin)");
        if (required) {
            o->required();
        }
    };

    auto* diff = app.add_subcommand("diff", "difference set A - B (B defaults to A)");
    add_input(diff, true);
    diff->add_option("--b", b_path, "point set B");
    add_common(diff);

    auto* sum = app.add_subcommand("sum", "sumset A + B (B defaults to A)");
    add_input(sum, true);
    sum->add_option("--b", b_path, "point set B");
    add_common(sum);

    auto* dim = app.add_subcommand("dim", "affine dimension");
    add_input(dim, true);
    add_common(dim);

    auto* lines = app.add_subcommand("lines", "partition into lines parallel to a direction (default: fewest lines)");
    add_input(lines, true);
    lines->add_option("--direction", direction, "comma-separated integers");
    add_common(lines);

    std::string normal;
    std::string offset = "0";
    auto* compress_cmd = app.add_subcommand("compress", "compression along --direction onto a hyperplane");
    add_input(compress_cmd, true);
    compress_cmd->add_option("--b", b_path, "second set, compressed with the same hyperplane and step");
    compress_cmd->add_option("--normal", normal, "hyperplane normal, comma-separated")->required();
    compress_cmd->add_option("--offset", offset, "hyperplane offset (rational)");
    compress_cmd->add_option("--direction", direction, "step vector, used verbatim")->required();
    add_common(compress_cmd);

    bool original_frame = false;
    auto* reduce_cmd = app.add_subcommand("reduce", "reduction of (A, B) along a line direction");
    add_input(reduce_cmd, true);
    reduce_cmd->add_option("--b", b_path, "point set B (default: empty)");
    reduce_cmd->add_option("--direction", direction, "line direction")->required();
    reduce_cmd->add_flag("--original-frame", original_frame, "report A', B' mapped back to the input frame");
    add_common(reduce_cmd);

    std::string kind;
    int c_d = 0;
    int c_k = 0;
    int c_n = 0;
    std::string lengths;
    auto* construct = app.add_subcommand("construct", "build a named construction");
    construct->add_option("kind", kind, "stanchescu | freiman-aps | stan-doubling-tight | dlines")
        ->required()
        ->check(CLI::IsMember({"stanchescu", "freiman-aps", "stan-doubling-tight", "dlines"}));
    construct->add_option("--d", c_d, "ambient dimension")->required();
    construct->add_option("--k", c_k, "AP length (stanchescu)");
    construct->add_option("--n", c_n, "grid length (stan-doubling-tight)");
    construct->add_option("--lengths", lengths, "comma-separated AP lengths (freiman-aps, dlines)");
    add_common(construct);

    std::vector<std::string> claim_names;
    std::map<std::string, std::string> bound_params;
    auto* bounds = app.add_subcommand("bounds", "evaluate a claim's bound formula");
    bounds->add_option("--claim", claim_names, "claim id")->required()->expected(1);
    for (const char* key : {"d", "n", "m", "r1", "r2", "a1"}) {
        bounds->add_option(std::string("--") + key, bound_params[key], std::string("parameter ") + key);
    }
    add_common(bounds);

    std::vector<std::string> inputs;
    bool as_conjecture = false;
    std::string eps;
    std::string cd;
    std::string format = "json";
    auto* claims = app.add_subcommand("claims", "check claims on instances");
    claims->add_option("--claim", claim_names, "claim id, repeatable; 'all' sweeps the catalog")->required();
    claims->add_option("--input", inputs, "point set A, repeatable")->required();
    claims->add_option("--b", b_path, "point set B");
    claims->add_option("--direction", direction, "line direction");
    claims->add_flag("--as-conjecture", as_conjecture, "treat MAIN as holding for every size");
    claims->add_option("--eps", eps, "LINES_4D epsilon (rational)");
    claims->add_option("--cd", cd, "LINES_4D constant C_d (rational)");
    claims->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    add_common(claims);

    SearchSpec spec;
    std::string spec_path;
    std::string mode = "exhaustive";
    bool no_prune = false;
    bool no_canonical = false;
    std::string claim_opt;
    auto* search = app.add_subcommand("search", "exhaustive minimum of |A-A| or a seeded random claim probe");
    search->add_option("--spec", spec_path, "SearchSpec JSON; flags below override it");
    auto* o_d = search->add_option("--d", spec.d, "dimension");
    auto* o_n = search->add_option("--n", spec.n, "set size");
    auto* o_box = search->add_option("--box", spec.box, "coordinates in [0, box]");
    auto* o_mode = search->add_option("--mode", mode, "exhaustive | random")->check(CLI::IsMember({"exhaustive", "random"}));
    auto* o_trials = search->add_option("--trials", spec.trials, "random trials");
    auto* o_claim = search->add_option("--claim", claim_opt, "claim to check on every candidate");
    auto* o_conj = search->add_flag("--as-conjecture", spec.as_conjecture, "MAIN as a conjecture");
    auto* o_full = search->add_flag("--full-dim", spec.require_full_dim, "only full-dimensional sets");
    auto* o_prune = search->add_flag("--no-prune", no_prune, "disable branch-and-bound pruning");
    auto* o_canon = search->add_flag("--no-canonical", no_canonical, "disable symmetry reduction");
    auto* o_budget = search->add_option("--budget", spec.budget, "maximum subsets to enumerate");
    auto* o_wit = search->add_option("--max-witnesses", spec.max_witnesses, "witnesses listed in the report");
    search->add_option("--seed", seed, "master seed")->required();
    search->add_option("--threads", threads, "worker threads (default: all)");
    add_common(search);

    VerifySuite vcfg;
    std::string dims;
    auto* verify = app.add_subcommand("verify", "run the verify battery");
    verify->add_option("--suite", vcfg.suite, "constructions | compression | reduce | claims | search | all")
        ->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--trials", vcfg.trials, "randomized instances per check");
    verify->add_option("--seed", vcfg.seed, "master seed")->required();
    verify->add_option("--dims", dims, "comma-separated dimensions in 2..6");
    add_common(verify);

    auto* diagnose = app.add_subcommand("diagnose", "structure report");
    add_input(diagnose, true);
    add_common(diagnose);

    auto* replay_cmd = app.add_subcommand("replay", "recompute a compression trace");
    add_input(replay_cmd, true);
    add_common(replay_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (diff->parsed() || sum->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            const PointSet b = b_path.empty() ? a : load_set(ctx, "b", b_path);
            const bool is_diff = diff->parsed();
            write(ctx, set_document(ctx, is_diff ? "diff" : "sum", is_diff ? difference_set(a, b) : sumset(a, b)));
        } else if (dim->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            write(ctx, envelope(ctx, "dim", json{{"ambient", a.dim()}, {"size", a.size()}, {"dim", affine_dimension(a)}}));
        } else if (lines->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            json r;
            if (direction.empty()) {
                const LineCover cover = min_line_cover(a);
                r = io::to_json(line_partition(a, cover.direction));
                r["min_cover"] = true;
            } else {
                r = io::to_json(line_partition(a, parse_direction(direction)));
                r["min_cover"] = false;
            }
            write(ctx, envelope(ctx, "lines", std::move(r)));
        } else if (compress_cmd->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            const CompressionSpec cs(Hyperplane(parse_int_list(normal, "--normal"), parse_rational(offset)),
                                     parse_int_list(direction, "--direction"));
            const auto ca = compress(a, cs);
            json r{{"hyperplane", io::to_json(cs.hyperplane())},
                   {"step", io::int_vector_json(cs.step())},
                   {"a", io::to_json(ca.image)},
                   {"point_map", io::to_json(ca.map)}};
            if (!b_path.empty()) {
                const PointSet b = load_set(ctx, "b", b_path);
                const auto cb = compress(b, cs);
                r["b"] = io::to_json(cb.image);
                r["b_point_map"] = io::to_json(cb.map);
                r["sum_before"] = sumset(a, b).size();
                r["sum_after"] = sumset(ca.image, cb.image).size();
            }
            write(ctx, envelope(ctx, "compress", std::move(r)));
        } else if (reduce_cmd->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            const PointSet b = b_path.empty() ? PointSet(a.dim()) : load_set(ctx, "b", b_path);
            const Reduction red = reduce(a, b, parse_direction(direction));
            const ReductionCheck chk = check_reduction(a, b, red);
            auto [ra, rb] = original_frame ? to_original_frame(red) : std::pair<PointSet, PointSet>{red.a, red.b};
            json r{{"frame", original_frame ? "original" : "normalized"},
                   {"a", io::to_json(ra)},
                   {"b", io::to_json(rb)},
                   {"lines", red.lines},
                   {"level_counts", red.level_counts},
                   {"checks", io::to_json(chk)},
                   {"trace", io::to_json(red.trace)}};
            write(ctx, envelope(ctx, "reduce", std::move(r)));
        } else if (construct->parsed()) {
            ConstructionId id{ConstructionKind::StanchescuDk, {{"d", {c_d}}}};
            if (kind == "stanchescu") {
                id.params["k"] = {c_k};
            } else if (kind == "stan-doubling-tight") {
                id.kind = ConstructionKind::StanDoublingTight;
                id.params["n"] = {c_n};
            } else {
                id.kind = kind == "dlines" ? ConstructionKind::DlinesGeneralPosition : ConstructionKind::FreimanAps;
                if (lengths.empty()) {
                    throw DomainError(kind + " needs --lengths");
                }
                id.params["lengths"] = parse_small_list(lengths, "--lengths");
            }
            const PointSet a = build(id);
            json params = json::object();
            for (const auto& [k, v] : id.params) {
                params[k] = v.size() == 1 && k != "lengths" ? json(v.front()) : json(v);
            }
            write(ctx, set_document(ctx, "construct", a,
                                    json{{"construction", construction_name(id.kind)}, {"params", params}}));
        } else if (bounds->parsed()) {
            const ClaimId claim = parse_claim(claim_names.front());
            BoundParams p;
            json shown = json::object();
            for (const auto& [k, v] : bound_params) {
                if (!v.empty()) {
                    p[k] = parse_integer(v, k.c_str());
                    shown[k] = to_string(p[k]);
                }
            }
            const Surd value = bound_value(claim, p);
            write(ctx, envelope(ctx, "bounds",
                                json{{"claim", claim_name(claim)}, {"params", shown}, {"value", io::to_json(value)},
                                     {"statement", claim_info(claim).statement}}));
        } else if (claims->parsed()) {
            std::vector<ClaimId> ids;
            bool sweep = false;
            for (const auto& name : claim_names) {
                if (name == "all") {
                    sweep = true;
                    for (const auto& info : claim_catalog()) {
                        ids.push_back(info.id);
                    }
                } else {
                    ids.push_back(parse_claim(name));
                }
            }
            ClaimOptions opt;
            opt.as_conjecture = as_conjecture;
            if (!eps.empty()) {
                opt.eps = parse_rational(eps);
            }
            if (!cd.empty()) {
                opt.c_d = parse_rational(cd);
            }
            std::optional<PointSet> b;
            if (!b_path.empty()) {
                b = load_set(ctx, "b", b_path);
            }
            std::optional<Direction> l;
            if (!direction.empty()) {
                l = parse_direction(direction);
            }
            std::vector<ClaimReport> reports;
            for (std::size_t i = 0; i < inputs.size(); ++i) {
                const PointSet a = load_set(ctx, inputs.size() == 1 ? "a" : "a" + std::to_string(i + 1), inputs[i]);
                for (ClaimId id : ids) {
                    const ClaimInfo& info = claim_info(id);
                    if (sweep) {
                        // skip what this instance cannot be checked against
                        const bool b_ok = info.b == Operand::Optional || (info.b == Operand::Required) == b.has_value();
                        const bool l_ok =
                            info.line == Operand::Optional || (info.line == Operand::Required) == l.has_value();
                        const bool d_ok = (info.fixed_dim == 0 || static_cast<std::size_t>(info.fixed_dim) == a.dim()) &&
                                          a.dim() >= static_cast<std::size_t>(info.min_dim);
                        const bool c_ok = !opt.eps || id == ClaimId::Lines4d;
                        if (!b_ok || !l_ok || !d_ok || !c_ok) {
                            continue;
                        }
                    }
                    reports.push_back(check_claim(id, a, b, l, opt));
                }
            }
            bool found = false;
            for (const auto& r : reports) {
                found = found || r.verdict == Verdict::Counterexample;
            }
            if (format == "csv") {
                std::string text = "claim,d,n,lhs,rhs,margin,verdict\n";
                for (const auto& r : reports) {
                    text += csv_row(r);
                }
                write(ctx, text);
            } else if (reports.size() == 1 && !sweep) {
                write(ctx, envelope(ctx, "claims", io::to_json(reports.front())));
            } else {
                json list = json::array();
                for (const auto& r : reports) {
                    list.push_back(io::to_json(r));
                }
                write(ctx, envelope(ctx, "claims", std::move(list)));
            }
            return found ? kFound : kOk;
        } else if (search->parsed()) {
            if (!spec_path.empty()) {
                const SearchSpec base = io::search_spec_from_json(load(ctx, "spec", spec_path));
                SearchSpec merged = base;
                // flags given on the command line win
                if (o_d->count()) merged.d = spec.d;
                if (o_n->count()) merged.n = spec.n;
                if (o_box->count()) merged.box = spec.box;
                if (o_trials->count()) merged.trials = spec.trials;
                if (o_conj->count()) merged.as_conjecture = spec.as_conjecture;
                if (o_full->count()) merged.require_full_dim = spec.require_full_dim;
                if (o_budget->count()) merged.budget = spec.budget;
                if (o_wit->count()) merged.max_witnesses = spec.max_witnesses;
                if (!o_mode->count()) mode = base.mode == SearchMode::Exhaustive ? "exhaustive" : "random";
                if (!o_prune->count()) no_prune = !base.prune;
                if (!o_canon->count()) no_canonical = !base.canonical;
                if (!o_claim->count() && base.claim) claim_opt = claim_name(*base.claim);
                spec = merged;
            } else if (!o_d->count() || !o_n->count()) {
                throw CLI::RequiredError("--d and --n (or --spec)");
            }
            spec.mode = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
            spec.prune = !no_prune;
            spec.canonical = !no_canonical;
            spec.claim = claim_opt.empty() ? std::nullopt : std::optional<ClaimId>(parse_claim(claim_opt));
            spec.seed = seed;
            spec.threads = threads;
            const SearchResult r = run_search(spec);
            write(ctx, envelope(ctx, "search", json{{"spec", io::to_json(spec)}, {"result", io::to_json(r)}}));
            const bool found = std::any_of(r.violations.begin(), r.violations.end(), [](const Violation& v) {
                return v.report.verdict == Verdict::Counterexample;
            });
            return found ? kFound : kOk;
        } else if (verify->parsed()) {
            if (!dims.empty()) {
                vcfg.dims = parse_small_list(dims, "--dims");
            }
            validate(vcfg);
            const json r = verify_battery(vcfg);
            write(ctx, envelope(ctx, "verify", r));
            return r.at("ok").get<bool>() ? kOk : kFound;
        } else if (diagnose->parsed()) {
            const PointSet a = load_set(ctx, "a", input);
            write(ctx, envelope(ctx, "diagnose", io::to_json(structure_diagnose(a))));
        } else if (replay_cmd->parsed()) {
            json j = load(ctx, "trace", input);
            if (j.contains("result")) {
                j = j.at("result");
            }
            if (j.contains("trace")) {
                j = j.at("trace");
            }
            const ReplayReport rep = replay(io::trace_from_json(j));
            write(ctx, envelope(ctx, "replay",
                                json{{"ok", rep.ok}, {"steps_checked", rep.steps_checked}, {"message", rep.message}}));
            return rep.ok ? kOk : kFound;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}
