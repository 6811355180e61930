#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include <qmzv/conversion.hpp>
#include <qmzv/derivation.hpp>
#include <qmzv/errors.hpp>
#include <qmzv/expansion.hpp>
#include <qmzv/json_io.hpp>
#include <qmzv/stuffle.hpp>

namespace qmzv::cli
{

namespace
{

using nlohmann::json;

constexpr std::size_t kDefaultPrecision = 100;

struct JobConfig
{
    std::optional<std::size_t> terms;
    std::string family = "okounkov";
    std::string format = "text";

    std::size_t precision() const
    {
        if (terms)
            return *terms;
        if (const char *env = std::getenv("QMZV_PRECISION")) {
            try {
                std::size_t used = 0;
                const long v = std::stol(env, &used);
                if (used == std::string(env).size() && v >= 1)
                    return static_cast<std::size_t>(v);
            } catch (const std::exception &) {
            }
            throw ParseError(std::string("QMZV_PRECISION must be a positive integer, got \"") + env + "\"");
        }
        return kDefaultPrecision;
    }
};

void add_common(CLI::App *cmd, JobConfig &cfg, bool with_family)
{
    cmd->add_option("-N,--terms", cfg.terms, "precision: coefficients up to q^N (default $QMZV_PRECISION or 100)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "table", "json"}));
    if (with_family)
        cmd->add_option("--family", cfg.family, "eulerian | okounkov | monomial | path to a family JSON file");
}

json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError(path + ": " + e.what());
    }
}

PolyFamily resolve_family(const std::string &spec)
{
    if (is_builtin_family_name(spec))
        return family_by_name(spec);
    if (std::filesystem::exists(spec))
        return family_from_json(std::filesystem::path(spec).stem().string(), read_json_file(spec));
    throw ParseError("unknown family '" + spec + "' (not a built-in name or a readable file)");
}

void print_series(std::ostream &out, const JobConfig &cfg, const QSeries &a, const json &context)
{
    if (cfg.format == "json") {
        json j = context;
        j.update(series_to_json(a));
        out << j.dump(2) << "\n";
    } else if (cfg.format == "table") {
        for (std::size_t n = 0; n <= a.precision(); ++n)
            out << n << ": " << to_string(a[n]) << "\n";
    } else {
        out << a.to_string() << "\n";
    }
}

void print_lincomb(std::ostream &out, const JobConfig &cfg, const LinComb &c)
{
    if (cfg.format == "json")
        out << lincomb_to_json(c).dump(2) << "\n";
    else
        out << c.to_string() << "\n";
}

// "d Z(2,3)", "Z(4)", "[2,1]", "d [3]". Returns (derived, basis marker, index).
struct TargetSpec
{
    bool derived = false;
    bool brackets = false;
    Index index;
};

TargetSpec parse_target(const std::string &text)
{
    static const std::regex pattern(R"(^\s*(d\s*)?(Z\s*\(([^)]*)\)|\[([^\]]*)\])\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern))
        throw ParseError("target must look like \"d Z(2,3)\" or \"[4]\", got \"" + text + "\"");
    TargetSpec t;
    t.derived = m[1].matched;
    t.brackets = m[4].matched;
    t.index = parse_index(t.brackets ? m[4].str() : m[3].str());
    return t;
}

int cmd_expand(std::ostream &out, const JobConfig &cfg, const std::string &index_text)
{
    const Index idx = parse_index(index_text);
    const PolyFamily family = resolve_family(cfg.family);
    const QSeries a = zq_expand(family, idx, cfg.precision());
    print_series(out, cfg, a, {{"family", family.name()}, {"index", idx.entries()}});
    return kOk;
}

int cmd_product(std::ostream &out, const JobConfig &cfg, const std::string &left, const std::string &right,
                const std::string &mode, bool check)
{
    const Index u = parse_index(left);
    const Index v = parse_index(right);
    const PolyFamily family = resolve_family(cfg.family);
    const std::size_t n = cfg.precision();
    if (mode == "series") {
        const QSeries a = zq_expand(family, u, n) * zq_expand(family, v, n);
        print_series(out, cfg, a, {{"family", family.name()}, {"left", u.entries()}, {"right", v.entries()}});
        return kOk;
    }
    const LinComb product = stuffle_product(family, u, v);
    std::optional<std::size_t> mismatch;
    if (check)
        mismatch = first_mismatch(lincomb_expand(family, product, n), zq_expand(family, u, n) * zq_expand(family, v, n));
    if (cfg.format == "json") {
        json j = {{"product", lincomb_to_json(product)}};
        if (check) {
            j["checked_precision"] = n;
            j["status"] = mismatch ? "refuted" : "verified";
        }
        out << j.dump(2) << "\n";
    } else {
        out << product.to_string() << "\n";
        if (check)
            out << (mismatch ? "refuted at q^" + std::to_string(*mismatch) : "verified to q^" + std::to_string(n))
                << "\n";
    }
    return check && mismatch ? kRefuted : kOk;
}

int cmd_convert(std::ostream &out, const JobConfig &cfg, const std::string &direction,
                const std::optional<std::string> &index_text, const std::optional<std::string> &file)
{
    const bool to_brackets = direction == "oz-to-brackets";
    const PolyFamily family = resolve_family(cfg.family);
    LinComb input(to_brackets ? family.name() : std::string("eulerian"));
    if (file) {
        input = lincomb_from_json(read_json_file(*file));
    } else if (index_text) {
        input.add_term(parse_index(*index_text), 1);
    } else {
        throw ParseError("convert needs --index or --lincomb-file");
    }
    const LinComb result = to_brackets ? zq_to_brackets(family, input) : brackets_to_family(family, input);
    print_lincomb(out, cfg, result);
    return kOk;
}

int cmd_derive(std::ostream &out, const JobConfig &cfg, std::optional<int> oz, std::optional<int> bracket,
               std::optional<int> s1, bool sharp)
{
    LinComb result;
    if (oz) {
        result = d_oz_representation(*oz);
    } else if (bracket) {
        const int m = *bracket;
        if (m < 1)
            throw UnsupportedIndexError("eulerian", 0, m);
        if (sharp) {
            result = d_bracket_md_sharp(m);
        } else {
            const int first = s1.value_or(1);
            result = d_bracket_representation(m + 2, first, m + 2 - first);
        }
    } else {
        throw ParseError("derive needs --oz or --bracket");
    }
    print_lincomb(out, cfg, result);
    return kOk;
}

int cmd_verify(std::ostream &out, const JobConfig &cfg, const std::string &file)
{
    const IdentitySpec spec = identity_from_json(read_json_file(file));
    const std::size_t n = cfg.precision();
    const IdentityRecord rec = verify_identity(spec.lhs, spec.lhs_derived, spec.rhs, n, spec.conjectural);
    if (cfg.format == "json") {
        json j = {{"status", rec.status == IdentityRecord::Status::refuted       ? "refuted"
                             : rec.status == IdentityRecord::Status::conjectural ? "conjectural-verified"
                                                                                 : "verified"},
                  {"checked_precision", n}};
        if (rec.first_mismatch)
            j["first_mismatch"] = *rec.first_mismatch;
        out << j.dump(2) << "\n";
    } else {
        out << (spec.lhs_derived ? "d(" + spec.lhs.to_string() + ")" : spec.lhs.to_string()) << " = "
            << spec.rhs.to_string() << "\n"
            << rec.status_text() << "\n";
    }
    return rec.status == IdentityRecord::Status::refuted ? kRefuted : kOk;
}

int cmd_find_relation(std::ostream &out, std::ostream &err, const JobConfig &cfg, const std::string &target_text,
                      int max_weight, bool force, const std::string &order)
{
    const TargetSpec t = parse_target(target_text);
    const PolyFamily target_family = t.brackets ? family_eulerian() : resolve_family(cfg.family);
    const PolyFamily basis = resolve_family(cfg.family);
    const std::size_t n = cfg.precision();
    const std::vector<Index> candidates = admissible_indices(basis, max_weight);
    if (!force && n < relation_min_precision(candidates.size())) {
        err << "error: precision " << n << " is below 2 x " << candidates.size()
            << " candidates; raise --terms or pass --force\n";
        return kUsage;
    }
    QSeries target = zq_expand(target_family, t.index, n);
    if (t.derived)
        target = q_derive(target);
    const RelationResult r = relation_find(target, candidates, basis, n, force,
                                           order == "preferred" ? CandidateOrder::preferred : CandidateOrder::canonical);
    if (cfg.format == "json") {
        json j = {{"target", target_text},
                  {"candidates", candidates.size()},
                  {"checked_precision", n},
                  {"rank", r.rank},
                  {"kernel_dimension", r.kernel_dimension}};
        if (r.found)
            j["combination"] = lincomb_to_json(r.combination);
        else
            j["augmented_rank"] = r.augmented_rank;
        out << j.dump(2) << "\n";
    } else {
        out << (r.found ? r.combination.to_string() : std::string("no solution")) << "\n";
        if (r.kernel_dimension > 0)
            out << "kernel dimension: " << r.kernel_dimension << "\n";
        if (!r.found)
            out << "rank " << r.rank << " < augmented rank " << r.augmented_rank << "\n";
    }
    return r.found ? kOk : kNoSolution;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact q-series expansions, quasi-shuffle products and derivation identities for q-analogues of "
                 "multiple zeta values"};
    app.name("qmzv");
    app.require_subcommand(1);

    JobConfig cfg;

    std::string index_text;
    auto *expand = app.add_subcommand("expand", "print the coefficients a_0..a_N of Z_Q(index)");
    add_common(expand, cfg, true);
    expand->add_option("--index", index_text, "comma-separated entries; \"\" is the empty index")->required();

    std::string left, right, mode = "stuffle";
    bool check = false;
    auto *product = app.add_subcommand("product", "product of two q-analogues");
    add_common(product, cfg, true);
    product->add_option("--left", left)->required();
    product->add_option("--right", right)->required();
    product->add_option("--mode", mode)->check(CLI::IsMember({"series", "stuffle"}));
    product->add_flag("--check", check, "verify the stuffle result against the series product");

    std::string direction;
    std::optional<std::string> convert_index, convert_file;
    auto *convert = app.add_subcommand("convert", "convert between a family basis and brackets");
    add_common(convert, cfg, true);
    convert->add_option("--direction", direction)
        ->required()
        ->check(CLI::IsMember({"oz-to-brackets", "brackets-to-oz"}));
    convert->add_option("--index", convert_index);
    convert->add_option("--lincomb-file", convert_file);

    std::optional<int> oz, bracket, s1;
    bool sharp = false;
    auto *derive = app.add_subcommand("derive", "representation of d = q d/dq applied to Z(k) or [m]");
    add_common(derive, cfg, false);
    auto *oz_opt = derive->add_option("--oz", oz, "Okounkov Z(k), k >= 2");
    auto *bracket_opt = derive->add_option("--bracket", bracket, "bracket [m]");
    oz_opt->excludes(bracket_opt);
    derive->add_option("--s1", s1, "first part of the splitting m + 2 = s1 + s2");
    derive->add_flag("--sharp", sharp, "cancel every entry-1 term (m >= 2)");

    std::string identity_file;
    auto *verify = app.add_subcommand("verify", "check an identity file coefficientwise");
    add_common(verify, cfg, false);
    verify->add_option("identity", identity_file, "identity JSON file")->required();

    std::string target_text, order = "canonical";
    int max_weight = 0;
    bool force = false;
    auto *find = app.add_subcommand("find-relation", "solve target = sum c_I Z(I) over all indices up to a weight");
    add_common(find, cfg, true);
    find->add_option("--target", target_text, "e.g. \"d Z(2,3)\" or \"[4]\"")->required();
    find->add_option("--max-weight", max_weight)->required()->check(CLI::PositiveNumber);
    find->add_flag("--force", force, "run even when N < 2 x candidates");
    find->add_option("--order", order, "column order")->check(CLI::IsMember({"canonical", "preferred"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (expand->parsed())
            return cmd_expand(out, cfg, index_text);
        if (product->parsed())
            return cmd_product(out, cfg, left, right, mode, check);
        if (convert->parsed())
            return cmd_convert(out, cfg, direction, convert_index, convert_file);
        if (derive->parsed())
            return cmd_derive(out, cfg, oz, bracket, s1, sharp);
        if (verify->parsed())
            return cmd_verify(out, cfg, identity_file);
        if (find->parsed())
            return cmd_find_relation(out, err, cfg, target_text, max_weight, force, order);
    } catch (const UnsupportedIndexError &e) {
        err << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const NotRepresentableError &e) {
        err << "error: " << e.what() << "\n";
        return kInadmissible;
    } catch (const ClosureFailure &e) {
        err << "error: " << e.what() << "\n";
        return kClosureFailure;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

} // namespace qmzv::cli
