#include "cli.hpp"

#include <fstream>
#include <random>

#include <CLI11.hpp>

#include "lips/cones.hpp"
#include "lips/error.hpp"
#include "lips/io.hpp"
#include "lips/membership.hpp"
#include "lips/oracle.hpp"
#include "lips/unbounded.hpp"

namespace lips::cli {
namespace {

enum class SetKind { Default, United, AE, Tolerable };

SetKind parse_set(const std::string& s) {
    if (s.empty()) return SetKind::Default;
    if (s == "united") return SetKind::United;
    if (s == "ae") return SetKind::AE;
    if (s == "tolerable") return SetKind::Tolerable;
    throw InputError("unknown set '" + s + "' (expected united, ae or tolerable)");
}

// Explicit --set wins; otherwise universal quantifiers in the file select the
// AE reading (tolerable when it fits), else the united set.
SetKind resolve_set(SetKind requested, const SystemDocument& doc) {
    if (requested != SetKind::Default) {
        if (requested == SetKind::Tolerable && !doc.tolerable) {
            throw InputError("--set tolerable needs existential parameters on the right-hand side only");
        }
        return requested;
    }
    if (doc.quantifiers.is_united()) return SetKind::United;
    return doc.tolerable ? SetKind::Tolerable : SetKind::AE;
}

QuantifierAssignment quantifiers_for(SetKind set, const SystemDocument& doc) {
    return set == SetKind::United ? QuantifierAssignment::all_existential(doc.system.num_params()) : doc.quantifiers;
}

Vector parse_point(const std::string& text, std::size_t n) {
    Vector v = parse_vector(text);
    if (v.size() != n) {
        throw InputError("vector '" + text + "' has " + std::to_string(v.size()) + " entries, expected " +
                         std::to_string(n));
    }
    return v;
}

std::string format_parameters(const ParametricSystem& sys, const Vector& p) {
    if (p.empty()) return "no parameters";
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += ", ";
        s += sys.params[k].name + " = " + to_string(p[k]);
    }
    return s;
}

void report_membership(const std::string& yes, const std::string& no, const ParametricSystem& sys,
                       const QuantifierAssignment& quant, const Vector& x, const MembershipResult& r,
                       std::ostream& out) {
    if (r.member) {
        if (quant.is_united()) {
            out << yes << " (witness " << format_parameters(sys, r.certificate.witness_p()) << ")\n";
        } else {
            out << yes << " (witnesses at " << r.certificate.witnesses.size() << " universal vertices)\n";
            for (const auto& p : r.certificate.witnesses) out << "  witness " << format_parameters(sys, p) << "\n";
        }
        return;
    }
    const bool valid = validate_certificate(sys, quant, x, r.certificate);
    out << no << " (separator w = " << format_vector(r.certificate.separator.w) << "; certificate "
        << (valid ? "valid" : "INVALID") << ")\n";
    if (!quant.is_united()) {
        Vector p(sys.num_params());
        for (std::size_t j = 0; j < quant.forall_set.size(); ++j) p[quant.forall_set[j]] = r.certificate.failing_vertex[j];
        std::string s;
        for (std::size_t j = 0; j < quant.forall_set.size(); ++j) {
            if (j) s += ", ";
            s += sys.params[quant.forall_set[j]].name + " = " + to_string(r.certificate.failing_vertex[j]);
        }
        out << "  failing universal vertex " << s << "\n";
    }
}

int cmd_check(const std::string& file, const std::string& point, const std::string& set, std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const Vector x = parse_point(point, doc.system.n);
    const SetKind kind = resolve_set(parse_set(set), doc);
    if (kind == SetKind::Tolerable) {
        const auto q = as_quantified(*doc.tolerable);
        report_membership("MEMBER", "NOT MEMBER", q.system, q.quantifiers, x, member_tolerable(*doc.tolerable, x), out);
        return kExitOk;
    }
    const QuantifierAssignment quant = quantifiers_for(kind, doc);
    report_membership("MEMBER", "NOT MEMBER", doc.system, quant, x, member_ae(doc.system, quant, x), out);
    return kExitOk;
}

int cmd_kernel(const std::string& file, const std::string& dir, bool strict, const std::string& set,
               std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const Vector y = parse_point(dir, doc.system.n);
    const SetKind kind = resolve_set(parse_set(set), doc);
    const QuantifierAssignment quant = quantifiers_for(kind, doc);
    const ParametricSystem hom = homogenized(doc.system);
    report_membership("IN KERNEL", "NOT IN KERNEL", hom, quant, y, member_ae(hom, quant, y), out);
    if (strict) {
        const auto s = strict_kernel_member_ae(doc.system, quant, y);
        if (s.interior) out << "STRICT: yes (eps = " << to_string(s.eps) << ")\n";
        else out << "STRICT: no\n";
    }
    return kExitOk;
}

int cmd_unbounded(const std::string& file, const std::string& dir, std::size_t budget, std::uint64_t seed,
                  std::size_t doublings, const std::string& set, std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const Vector y = parse_point(dir, doc.system.n);
    const SetKind kind = resolve_set(parse_set(set), doc);
    UnboundedVerdict v = kind == SetKind::Tolerable
                             ? decide_unbounded_tolerable(*doc.tolerable, y, budget, seed, doublings)
                             : decide_unbounded(doc.system, quantifiers_for(kind, doc), y, budget, seed, doublings);
    out << describe(v) << "\n";
    return kExitOk;
}

int cmd_classify(const std::string& file, bool decompose, std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const std::optional<QuantifierAssignment> quant =
        doc.explicit_quantifiers ? std::optional(doc.quantifiers) : std::nullopt;
    const SystemClass cls = classify(doc.system, quant);
    out << cls.to_string() << "\n";
    if (!decompose) return kExitOk;
    if (!cls.has(ClassFlag::Ordinary) && !cls.has(ClassFlag::ClassC)) {
        out << "decomposition: not applicable\n";
        return kExitOk;
    }
    const auto report = special_class_unbounded_equality(doc.system);
    out << "mode: " << (report.mode == DecompositionMode::Orthant ? "ORTHANT" : "SIGNCONE") << "\n";
    for (const auto& piece : report.pieces) {
        out << "piece " << format_signs(piece.signs) << ": ";
        if (!piece.nonempty) {
            out << "solution empty\n";
            continue;
        }
        out << "solution nonempty; recession cone " << (piece.comparison.equal ? "==" : "!=") << " kernel piece ("
            << (piece.comparison.syntactic ? "syntactic" : "lp") << ")\n";
    }
    if (report.sigma_empty) out << "sigma: empty; hypothesis unmet\n";
    else out << "sigma: nonempty; equality " << (report.verified ? "verified" : "FAILED") << "\n";
    return kExitOk;
}

int cmd_raster(const std::string& file, const std::string& window, std::size_t res, const std::string& set,
               const std::string& path, std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const Vector w = parse_vector(window);
    if (w.size() != 4) throw InputError("--window expects x1_lo,x1_hi,x2_lo,x2_hi");
    RasterSet which;
    if (set == "united") which = RasterSet::United;
    else if (set == "ae") which = RasterSet::AE;
    else if (set == "tolerable") which = RasterSet::Tolerable;
    else if (set == "kernel") which = RasterSet::Kernel;
    else throw InputError("unknown raster set '" + set + "' (expected united, ae, tolerable or kernel)");

    const auto grid = rasterize(doc.system, doc.quantifiers, {w[0], w[1], w[2], w[3]}, res, which);
    std::ofstream csv(path);
    if (!csv) throw InputError("cannot write " + path);
    write_raster_csv(grid, csv);
    std::size_t members = 0;
    for (bool b : grid.member) members += b;
    out << "wrote " << grid.member.size() << " cells (" << members << " members) to " << path << "\n";
    return kExitOk;
}

struct Tally {
    std::string name;
    std::size_t agree = 0;
    std::size_t total = 0;

    void add(bool ok) {
        ++total;
        agree += ok;
    }
};

int cmd_verify(const std::string& file, std::size_t samples, std::uint64_t seed, std::ostream& out) {
    const SystemDocument doc = load_system(file);
    const ParametricSystem& sys = doc.system;
    const QuantifierAssignment united = QuantifierAssignment::all_existential(sys.num_params());
    const SystemClass cls = classify(sys);
    const ParametricSystem hom = homogenized(sys);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den_pick(0, 2);
    std::uniform_int_distribution<int> nudge(-1, 1);
    const auto bases = find_base_points(sys, united, 16, seed);

    std::vector<Vector> points;
    for (std::size_t i = 0; i < samples; ++i) {
        Vector x(sys.n);
        if (!bases.empty() && i % 3 == 0) {
            x = bases[(i / 3) % bases.size()];
            if (i % 2 == 1) {
                for (auto& c : x) c += ratio(nudge(rng), 2);
            }
        } else {
            for (auto& c : x) c = ratio(num(rng), 1 << den_pick(rng));
        }
        points.push_back(std::move(x));
    }

    Tally fm{"united vs fm oracle"};
    Tally cert{"united certificates"};
    Tally kernel{"kernel vs fm oracle"};
    Tally op{"oettli-prager vs united"};
    Tally fc{"first-class vs united"};
    Tally ae{"ae vs vertex oracle"};
    Tally ae_cert{"ae certificates"};
    for (const auto& x : points) {
        const auto r = member_united(sys, x);
        fm.add(r.member == fm_member_oracle(sys, x));
        cert.add(r.member ? validate_witness(sys, x, r.certificate) : validate_certificate(sys, united, x, r.certificate));
        kernel.add(member_kernel(sys, x).member == fm_member_oracle(hom, x));
        if (cls.has(ClassFlag::Ordinary)) op.add(oettli_prager_member(sys, x) == r.member);
        if (cls.has(ClassFlag::FirstClass)) fc.add(member_first_class(sys, x) == r.member);
        if (!doc.quantifiers.is_united()) {
            const auto a = member_ae(sys, doc.quantifiers, x);
            ae.add(a.member == ae_vertex_oracle(sys, doc.quantifiers, x));
            ae_cert.add(a.member ? validate_witness(sys, x, a.certificate)
                                 : validate_certificate(sys, doc.quantifiers, x, a.certificate));
        }
    }

    out << "system: m=" << sys.m << " n=" << sys.n << " K=" << sys.num_params() << " class=" << cls.to_string() << "\n";
    out << "samples: " << samples << " seed: " << seed << " base points: " << bases.size() << "\n";
    bool ok = true;
    for (const Tally* t : {&fm, &cert, &kernel, &op, &fc, &ae, &ae_cert}) {
        if (t->total == 0) continue;
        out << t->name << ": " << t->agree << "/" << t->total << "\n";
        ok = ok && t->agree == t->total;
    }
    out << "result: " << (ok ? "OK" : "DISAGREEMENT") << "\n";
    return ok ? kExitOk : kExitDisagreement;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of linear interval parametric systems", "lips"};
    app.require_subcommand(1);

    std::string file, vec, set, window, path;
    bool strict = false;
    bool decompose = false;
    std::size_t budget = kDefaultBudget;
    std::size_t doublings = kDefaultDoublings;
    std::size_t res = 0;
    std::size_t samples = 100;
    std::uint64_t seed = 0;

    auto* check = app.add_subcommand("check", "membership of a point, with certificate");
    check->add_option("file", file, "system file")->required();
    check->add_option("--point", vec, "comma-separated rationals")->required();
    check->add_option("--set", set, "united | ae | tolerable");

    auto* kernel = app.add_subcommand("kernel", "kernel membership of a direction");
    kernel->add_option("file", file, "system file")->required();
    kernel->add_option("--dir", vec, "comma-separated rationals")->required();
    kernel->add_flag("--strict", strict, "also test the strict (interior) condition");
    kernel->add_option("--set", set, "united | ae | tolerable");

    auto* unbounded = app.add_subcommand("unbounded", "decide whether a direction is unbounded");
    unbounded->add_option("file", file, "system file")->required();
    unbounded->add_option("--dir", vec, "comma-separated rationals")->required();
    unbounded->add_option("--budget", budget, "parameter vectors tried for base points");
    unbounded->add_option("--seed", seed, "random seed");
    unbounded->add_option("--doublings", doublings, "probe up to alpha = 2^doublings");
    unbounded->add_option("--set", set, "united | ae | tolerable");

    auto* cls = app.add_subcommand("classify", "structural class of a system");
    cls->add_option("file", file, "system file")->required();
    cls->add_flag("--decompose", decompose, "orthant / sign-cone piece report");

    auto* raster = app.add_subcommand("raster", "membership grid of a 2-D set as CSV");
    raster->add_option("file", file, "system file")->required();
    raster->add_option("--window", window, "x1_lo,x1_hi,x2_lo,x2_hi")->required();
    raster->add_option("--res", res, "points per axis")->required();
    raster->add_option("--set", set, "united | ae | tolerable | kernel")->required();
    raster->add_option("--out", path, "output CSV path")->required();

    auto* verify = app.add_subcommand("verify", "cross-check decision paths against the oracles");
    verify->add_option("file", file, "system file")->required();
    verify->add_option("--samples", samples, "number of sample points");
    verify->add_option("--seed", seed, "random seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(file, vec, set, out);
        if (kernel->parsed()) return cmd_kernel(file, vec, strict, set, out);
        if (unbounded->parsed()) return cmd_unbounded(file, vec, budget, seed, doublings, set, out);
        if (cls->parsed()) return cmd_classify(file, decompose, out);
        if (raster->parsed()) return cmd_raster(file, window, res, set, path, out);
        if (verify->parsed()) return cmd_verify(file, samples, seed, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace lips::cli
