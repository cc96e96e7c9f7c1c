// Batch front-end: parse a job (file or flags), dispatch the
// computation, and emit a table or report. Exit codes: 0 success,
// 1 negative mathematical verdict, 2 input error, 3 budget exhaustion.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "nichols/approx.hpp"
#include "nichols/braiding.hpp"
#include "nichols/cocycle.hpp"
#include "nichols/common.hpp"
#include "nichols/fixtures.hpp"
#include "nichols/graded.hpp"
#include "nichols/rack.hpp"
#include "nichols/serialize.hpp"
#include "nichols/twist.hpp"

namespace {

using nichols::Json;

struct Outcome {
    int code = 0;
    std::string text;
};

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw nichols::input_error(what + ": invalid JSON (" + e.what() + ")");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nichols::input_error("cannot open input file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

Json resolve_input(const Json& job) {
    if (!job.contains("input")) throw nichols::input_error("job has no 'input'");
    const Json& in = job.at("input");
    if (in.is_string()) {
        std::string name = in.get<std::string>();
        if (nichols::is_fixture_name(name)) return nichols::fixture_json(name);
        return read_json_file(name);
    }
    if (in.is_object()) return in;
    throw nichols::input_error("'input' must be a fixture name, a file path, or an inline object");
}

std::size_t require_param(const Json& job, const char* name) {
    if (!job.contains(name)) throw nichols::input_error(std::string("job requires parameter '") + name + "'");
    if (!job.at(name).is_number_unsigned())
        throw nichols::input_error(std::string("parameter '") + name + "' must be a non-negative integer");
    return job.at(name).get<std::size_t>();
}

nichols::ComputeOptions options_of(const Json& job) {
    nichols::ComputeOptions opts;
    if (job.contains("budget")) {
        opts.budget.max_ambient = job.at("budget").get<std::size_t>();
        opts.budget.max_work = nichols::sat_mul(opts.budget.max_ambient, 100);
    }
    if (job.contains("threads")) opts.threads = job.at("threads").get<unsigned>();
    if (job.contains("blocked")) opts.use_blocks = job.at("blocked").get<bool>();
    return opts;
}

std::string format_of(const Json& job) {
    std::string f = job.contains("format") ? job.at("format").get<std::string>() : std::string("json");
    if (f != "json" && f != "tsv") throw nichols::input_error("format must be 'json' or 'tsv'");
    return f;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string render_hilbert(const nichols::HilbertPrefix& h, const std::string& format) {
    return format == "tsv" ? nichols::hilbert_to_tsv(h) : render_json(nichols::hilbert_to_json(h));
}

// A candidate braiding matrix built without the construction-time
// Yang-Baxter enforcement, so the yangbaxter command can return a verdict.
nichols::SparseMatrix candidate_matrix(const Json& in) {
    if (in.contains("braiding")) return candidate_matrix(in.at("braiding"));
    if (in.contains("entries")) return nichols::matrix_from_entries_json(in);
    if (in.contains("Q")) {
        nichols::RackCocycle q = nichols::RackCocycle::from_table(nichols::scalar_table_from_json(in.at("Q")));
        std::size_t n = q.size();
        nichols::SparseMatrix m(n * n, n * n, q.modulus);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(j * n + i, i * n + j, q.value(i, j));
        return m;
    }
    if (in.contains("q")) {
        nichols::RackCocycleInput rc = nichols::rack_cocycle_from_json(in);
        std::size_t n = rc.rack.size();
        nichols::SparseMatrix m(n * n, n * n, rc.q.modulus);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                m.set(rc.rack.apply(x, y) * n + x, x * n + y, rc.q.value(x, y));
        return m;
    }
    throw nichols::input_error("yangbaxter: input is not braiding-shaped");
}

nichols::AlgebraTag tag_of(const Json& job, const Json& input) {
    if (job.contains("algebra")) return nichols::algebra_tag_from(job.at("algebra").get<std::string>());
    if (input.contains("algebra")) return nichols::algebra_tag_from(input.at("algebra").get<std::string>());
    return nichols::AlgebraTag::nichols;
}

nichols::GroupCocycle resolve_sigma(const Json& job, const nichols::GroupTable& g) {
    if (!job.contains("sigma")) throw nichols::input_error("job requires 'sigma'");
    Json spec = job.at("sigma");
    if (spec.is_string()) {
        std::string s = spec.get<std::string>();
        if (!s.empty() && s[0] == '{') spec = parse_json_text(s, "sigma");
        else spec = read_json_file(s);
    }
    nichols::GroupCocycle sigma;
    if (spec.contains("sigma")) {
        sigma = nichols::group_cocycle_table_from_json(spec);
    } else if (spec.contains("coboundary")) {
        std::vector<nichols::ExactScalar> mu;
        for (const auto& v : spec.at("coboundary").at("mu"))
            mu.push_back(nichols::parse_scalar(v.get<std::string>()));
        sigma = nichols::coboundary(g, mu);
    } else if (spec.contains("random_coboundary")) {
        const Json& rc = spec.at("random_coboundary");
        std::uint64_t seed = rc.contains("seed") ? rc.at("seed").get<std::uint64_t>()
                             : job.contains("seed") ? job.at("seed").get<std::uint64_t>()
                                                    : 0;
        unsigned order = rc.contains("order") ? rc.at("order").get<unsigned>() : 12u;
        sigma = nichols::random_coboundary(g, seed, order);
    } else {
        throw nichols::input_error("sigma must provide 'sigma', 'coboundary', or 'random_coboundary'");
    }
    if (sigma.size() != g.size()) throw nichols::input_error("sigma size does not match group");
    nichols::CocycleCheck chk = nichols::validate_group_cocycle(g, sigma);
    if (!chk.ok) throw nichols::input_error("sigma is not a group 2-cocycle: " + chk.message);
    return sigma;
}

Outcome cmd_fixtures(const Json& job) {
    std::string format = format_of(job);
    if (format == "tsv") {
        std::ostringstream os;
        os << "name\tkind\n";
        for (const auto& n : nichols::fixture_names())
            os << n << '\t' << nichols::fixture_json(n).at("kind").get<std::string>() << '\n';
        return {0, os.str()};
    }
    Json out = Json::array();
    for (const auto& n : nichols::fixture_names()) {
        Json f;
        f["name"] = n;
        f["kind"] = nichols::fixture_json(n).at("kind");
        out.push_back(std::move(f));
    }
    return {0, render_json(out)};
}

Outcome cmd_validate(const Json& job) {
    Json in = resolve_input(job);
    Json report;
    bool ok = true;
    if (in.contains("sigma")) {
        nichols::GroupTable g = nichols::group_from_json(in.at("group"));
        nichols::GroupCocycle sigma = nichols::group_cocycle_table_from_json(in);
        if (sigma.size() != g.size()) throw nichols::input_error("sigma size does not match group");
        nichols::CocycleCheck c = nichols::validate_group_cocycle(g, sigma);
        report["object"] = "group_cocycle";
        report["ok"] = c.ok;
        if (!c.ok) {
            report["violation"] = Json{{"x", c.x}, {"y", c.y}, {"z", c.z},
                                       {"lhs", c.lhs}, {"rhs", c.rhs}, {"message", c.message}};
            ok = false;
        }
    } else if (in.contains("q") || in.contains("Q")) {
        bool diagonal = in.contains("Q");
        report["object"] = diagonal ? "diagonal_braiding" : "rack_cocycle";
        if (diagonal) {
            nichols::RackCocycle::from_table(nichols::scalar_table_from_json(in.at("Q")));
            report["ok"] = true;  // any nonzero table is a diagonal braiding
        } else {
            nichols::RackCocycleInput rc = nichols::rack_cocycle_from_json(in);
            nichols::CocycleCheck c = nichols::validate_rack_cocycle(rc.rack, rc.q);
            report["ok"] = c.ok;
            if (!c.ok) {
                report["violation"] = Json{{"x", c.x}, {"y", c.y}, {"z", c.z},
                                           {"lhs", c.lhs}, {"rhs", c.rhs}, {"message", c.message}};
                ok = false;
            }
        }
    } else if (in.contains("op")) {
        nichols::OpTable t = nichols::detail::op_table_from_json(in.at("op"), "rack");
        if (in.contains("size") && in.at("size").get<std::size_t>() != t.size())
            throw nichols::input_error("rack: declared size does not match table");
        nichols::RackCheck c = nichols::validate_rack(t);
        report["object"] = "rack";
        report["ok"] = c.ok();
        if (!c.ok()) {
            report["violation"] = Json{{"x", c.x}, {"y", c.y}, {"z", c.z}, {"message", c.message}};
            ok = false;
        }
    } else if (in.contains("mul")) {
        nichols::group_from_json(in);  // throws on malformed input
        report["object"] = "group";
        report["ok"] = true;
    } else if (in.contains("entries")) {
        nichols::YbeCheck c = nichols::check_yang_baxter(nichols::matrix_from_entries_json(in));
        report["object"] = "braiding";
        report["ok"] = c.ok;
        if (!c.ok) {
            report["violation"] = Json{{"basis_index", c.basis_index}, {"message", c.message}};
            ok = false;
        }
    } else if (in.contains("relations")) {
        nichols::presentation_from_json(in);  // throws on malformed input
        report["object"] = "presentation";
        report["ok"] = true;
    } else if (in.contains("braiding") || in.contains("algebra")) {
        Json inner = job;
        inner["input"] = in.at("braiding");
        return cmd_validate(inner);
    } else {
        throw nichols::input_error("validate: unrecognized input object");
    }
    return {ok ? 0 : 1, render_json(report)};
}

Outcome cmd_yangbaxter(const Json& job) {
    Json in = resolve_input(job);
    nichols::YbeCheck c = nichols::check_yang_baxter(candidate_matrix(in));
    Json report;
    report["ok"] = c.ok;
    if (!c.ok) report["violation"] = Json{{"basis_index", c.basis_index}, {"message", c.message}};
    return {c.ok ? 0 : 1, render_json(report)};
}

Outcome cmd_nichols(const Json& job) {
    Json in = resolve_input(job);
    nichols::Braiding c = nichols::braiding_from_json(in);
    nichols::HilbertPrefix h = nichols::nichols_dims(c, require_param(job, "N"), options_of(job));
    return {h.truncated ? 3 : 0, render_hilbert(h, format_of(job))};
}

Outcome cmd_cover(const Json& job) {
    Json in = resolve_input(job);
    nichols::Braiding c = nichols::braiding_from_json(in);
    nichols::HilbertPrefix h =
        nichols::cover_dims(c, require_param(job, "d"), require_param(job, "N"), options_of(job));
    return {h.truncated ? 3 : 0, render_hilbert(h, format_of(job))};
}

Outcome cmd_cover_check(const Json& job) {
    Json in = resolve_input(job);
    nichols::Braiding c = nichols::braiding_from_json(in);
    nichols::CoverCheck r =
        nichols::cover_check(c, require_param(job, "d"), require_param(job, "N"), options_of(job));
    int code = !r.agree ? 1 : (r.truncated ? 3 : 0);
    return {code, render_json(nichols::cover_check_to_json(r))};
}

Outcome cmd_truncate(const Json& job) {
    Json in = resolve_input(job);
    nichols::Braiding c = nichols::braiding_from_json(in);
    nichols::TruncatedBialgebra a =
        nichols::truncate_graded_algebra(c, tag_of(job, in), require_param(job, "d"), options_of(job));
    return {0, render_json(nichols::truncated_to_json(a))};
}

Outcome cmd_extend(const Json& job) {
    Json in = resolve_input(job);
    nichols::TruncatedBialgebra a = nichols::truncated_from_json(in);
    nichols::HilbertPrefix h = nichols::extension_dims(a, require_param(job, "N"), options_of(job));
    return {h.truncated ? 3 : 0, render_hilbert(h, format_of(job))};
}

Outcome cmd_approx(const Json& job) {
    Json in = resolve_input(job);
    nichols::Braiding c = nichols::braiding_from_json(in);
    nichols::HilbertPrefix h = nichols::approximation_dims(
        c, tag_of(job, in), require_param(job, "d"), require_param(job, "N"), options_of(job));
    return {h.truncated ? 3 : 0, render_hilbert(h, format_of(job))};
}

nichols::RackCocycleInput embedded_input(const Json& job) {
    Json in = resolve_input(job);
    nichols::RackCocycleInput rc = nichols::rack_cocycle_from_json(in);
    if (!rc.embedding)
        throw nichols::input_error("this command requires the embedded form {group, subset, q}");
    nichols::CocycleCheck chk = nichols::validate_rack_cocycle(rc.rack, rc.q);
    if (!chk.ok) throw nichols::input_error("q is not a rack 2-cocycle: " + chk.message);
    return rc;
}

Outcome cmd_twist(const Json& job) {
    nichols::RackCocycleInput rc = embedded_input(job);
    nichols::GroupCocycle sigma = resolve_sigma(job, rc.embedding->group);
    nichols::TwistInvarianceReport rep = nichols::twist_invariance_check(
        *rc.embedding, rc.q, sigma, require_param(job, "d"), require_param(job, "N"), options_of(job));
    bool ok = rep.all_equal() && rep.q_prime_valid.ok;
    return {ok ? 0 : 1, render_json(nichols::twist_report_to_json(rep))};
}

Outcome cmd_intertwine(const Json& job) {
    nichols::RackCocycleInput rc = embedded_input(job);
    nichols::GroupCocycle sigma = resolve_sigma(job, rc.embedding->group);
    std::size_t N = require_param(job, "N");
    nichols::ComputeOptions opts = options_of(job);
    nichols::TwistResult tw = nichols::twist_rack_cocycle(*rc.embedding, rc.q, sigma);
    Json report;
    report["qprime"] = nichols::scalar_table_to_json(tw.q_prime.q);
    std::size_t verified = 0;
    bool ok = true;
    for (std::size_t n = 2; n <= N; ++n) {
        try {
            nichols::IntertwineCheck c =
                nichols::verify_intertwining(*rc.embedding, rc.q, tw.q_prime, sigma, n, opts);
            if (!c.ok) {
                ok = false;
                report["violation"] =
                    Json{{"n", n}, {"generator", c.generator}, {"basis_index", c.basis_index},
                         {"message", c.message}};
                break;
            }
            verified = n;
        } catch (const nichols::budget_error&) {
            break;
        }
    }
    report["intertwiner_verified_up_to_n"] = verified;
    report["ok"] = ok;
    return {ok ? 0 : 1, render_json(report)};
}

Outcome dispatch(const Json& job) {
    std::string cmd = job.contains("command") ? job.at("command").get<std::string>() : std::string();
    if (cmd == "fixtures") return cmd_fixtures(job);
    if (cmd == "validate") return cmd_validate(job);
    if (cmd == "yangbaxter") return cmd_yangbaxter(job);
    if (cmd == "nichols") return cmd_nichols(job);
    if (cmd == "cover") return cmd_cover(job);
    if (cmd == "cover-check") return cmd_cover_check(job);
    if (cmd == "truncate") return cmd_truncate(job);
    if (cmd == "extend") return cmd_extend(job);
    if (cmd == "approx") return cmd_approx(job);
    if (cmd == "twist") return cmd_twist(job);
    if (cmd == "intertwine") return cmd_intertwine(job);
    throw nichols::input_error("unknown command '" + cmd + "'");
}

void write_output(const Json& job, const std::string& text) {
    if (job.contains("out")) {
        std::filesystem::path target = job.at("out").get<std::string>();
        std::filesystem::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw nichols::input_error("cannot write output file '" + target.string() + "'");
            out << text;
        }
        std::filesystem::rename(tmp, target);
    } else {
        std::fputs(text.c_str(), stdout);
    }
}

int error_out(const char* kind, const std::string& message, int code) {
    Json e;
    e["error"] = Json{{"kind", kind}, {"message", message}};
    std::fputs((e.dump(2) + "\n").c_str(), stderr);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation with racks, braidings, and Nichols algebras"};
    std::string job_file, command, input, algebra, sigma, format, out;
    long long d = -1, N = -1;
    long long budget = -1, seed = -1, threads = -1;
    bool blocked = false;
    app.add_option("--job", job_file, "job description file (JSON)");
    app.add_option("--command", command, "command to run");
    app.add_option("--input", input, "fixture name, file path, or inline JSON object");
    app.add_option("--algebra", algebra, "algebra tag for truncate/approx (tensor|shuffle|nichols)");
    app.add_option("--sigma", sigma, "group 2-cocycle spec (file path or inline JSON)");
    app.add_option("--d", d, "truncation / cover degree");
    app.add_option("--N", N, "top degree of the dimension table");
    app.add_option("--budget", budget, "max ambient coordinates per degree");
    app.add_option("--seed", seed, "seed for seeded sigma generators");
    app.add_option("--format", format, "output format (json|tsv)");
    app.add_option("--out", out, "write output to this file (atomically)");
    app.add_option("--threads", threads, "worker threads for column assembly");
    app.add_flag("--blocked", blocked, "use the grading-block rank decomposition");
    CLI11_PARSE(app, argc, argv);

    try {
        Json job = Json::object();
        if (!job_file.empty()) job = read_json_file(job_file);
        if (!command.empty()) job["command"] = command;
        if (!input.empty()) {
            if (input[0] == '{') job["input"] = parse_json_text(input, "--input");
            else job["input"] = input;
        }
        if (!algebra.empty()) job["algebra"] = algebra;
        if (!sigma.empty()) job["sigma"] = sigma;
        if (d >= 0) job["d"] = static_cast<std::size_t>(d);
        if (N >= 0) job["N"] = static_cast<std::size_t>(N);
        if (budget >= 0) job["budget"] = static_cast<std::size_t>(budget);
        if (seed >= 0) job["seed"] = static_cast<std::uint64_t>(seed);
        if (!format.empty()) job["format"] = format;
        if (!out.empty()) job["out"] = out;
        if (threads >= 0) job["threads"] = static_cast<unsigned>(threads);
        if (blocked) job["blocked"] = true;

        Outcome result = dispatch(job);
        write_output(job, result.text);
        return result.code;
    } catch (const nichols::budget_error& e) {
        return error_out("budget", e.what(), 3);
    } catch (const nichols::input_error& e) {
        return error_out("input", e.what(), 2);
    } catch (const std::exception& e) {
        return error_out("input", e.what(), 2);
    }
}
