#include "bdfkit/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdfkit/bdf.hpp"
#include "bdfkit/cycnum.hpp"
#include "bdfkit/fixtures.hpp"
#include "bdfkit/orbits.hpp"
#include "bdfkit/polarization.hpp"
#include "bdfkit/torus.hpp"

#ifndef BDFKIT_VERSION
#define BDFKIT_VERSION "0.0.0"
#endif

namespace bdf::cli
{
    namespace
    {
        using json = nlohmann::json;

        struct Output
        {
            json inputs = json::object();
            json results = json::object();
            json flags = json::array();
            std::string status = "ok";
            std::vector<std::string> columns;
            std::vector<std::vector<std::string>> rows;
        };

        int exit_code(const std::string &status)
        {
            if (status == "ok")
                return kOk;
            if (status == "verification_failed")
                return kVerificationFailed;
            if (status == "inconclusive")
                return kInconclusive;
            return kBadInput;
        }

        std::vector<long> parse_list(const std::string &text)
        {
            std::string s;
            for (char c : text)
                if (c != '(' && c != ')' && c != ' ')
                    s += c;
            std::vector<long> out;
            std::stringstream ss(s);
            std::string part;
            while (std::getline(ss, part, ','))
            {
                size_t used = 0;
                long v = 0;
                try
                {
                    v = std::stol(part, &used);
                }
                catch (const std::exception &)
                {
                    used = 0;
                }
                if (part.empty() || used != part.size())
                    throw InvalidInput("expected comma separated integers, got '" + text + "'");
                out.push_back(v);
            }
            if (out.empty())
                throw InvalidInput("empty integer list");
            return out;
        }

        // "2:2,4:1" -> {(2,2),(4,1)}
        CyclotomicModule parse_module(const std::string &text)
        {
            std::vector<std::pair<long, long>> comps;
            std::stringstream ss(text);
            std::string part;
            while (std::getline(ss, part, ','))
            {
                size_t colon = part.find(':');
                if (colon == std::string::npos)
                    throw InvalidInput("module components are k:r, got '" + part + "'");
                auto k = parse_list(part.substr(0, colon));
                auto r = parse_list(part.substr(colon + 1));
                comps.emplace_back(k.at(0), r.at(0));
            }
            return CyclotomicModule(comps);
        }

        json group_json(const FiniteAbelianGroup &g) { return g.invariant_factors(); }

        std::string join(const std::vector<std::string> &v, const std::string &sep)
        {
            std::string s;
            for (size_t i = 0; i < v.size(); ++i)
                s += (i ? sep : "") + v[i];
            return s;
        }

        json flag_json(const DiscrepancyFlag &f)
        {
            return json{{"table_id", f.table_id},
                        {"row_key", f.row_key},
                        {"column", f.column},
                        {"computed_value", f.computed_value},
                        {"printed_value", f.printed_value},
                        {"note", f.note}};
        }

        std::string csv_cell(const std::string &s)
        {
            if (s.find_first_of(",\"\n") == std::string::npos)
                return s;
            std::string q = "\"";
            for (char c : s)
                q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        }

        std::string md_cell(const std::string &s)
        {
            std::string q;
            for (char c : s)
                q += c == '|' ? std::string("\\|") : std::string(1, c);
            return q;
        }

        void render(const std::string &command, const Output &o, const std::string &format, std::ostream &out)
        {
            if (format == "json")
            {
                json doc{{"schema", kSchemaVersion}, {"command", command}, {"inputs", o.inputs},
                         {"results", o.results},     {"flags", o.flags},   {"status", o.status}};
                out << doc.dump(2) << "\n";
                return;
            }
            if (format == "csv")
            {
                out << join([&] {
                    std::vector<std::string> c;
                    for (const auto &h : o.columns)
                        c.push_back(csv_cell(h));
                    return c;
                }(),
                            ",")
                    << "\n";
                for (const auto &r : o.rows)
                {
                    std::vector<std::string> c;
                    for (const auto &x : r)
                        c.push_back(csv_cell(x));
                    out << join(c, ",") << "\n";
                }
                return;
            }
            std::vector<std::string> head, rule;
            for (const auto &h : o.columns)
            {
                head.push_back(md_cell(h));
                rule.push_back("---");
            }
            out << "| " << join(head, " | ") << " |\n|" << join(rule, "|") << "|\n";
            for (const auto &r : o.rows)
            {
                std::vector<std::string> c;
                for (const auto &x : r)
                    c.push_back(md_cell(x));
                out << "| " << join(c, " | ") << " |\n";
            }
            out << "\nstatus: " << o.status << "\n";
            for (const auto &f : o.flags)
                out << "- " << f["table_id"].get<std::string>() << " [" << f["row_key"].get<std::string>() << "] "
                    << f["column"].get<std::string>() << ": computed " << f["computed_value"].get<std::string>()
                    << ", printed " << f["printed_value"].get<std::string>() << "\n";
        }

        struct Options
        {
            std::string format = "json";
            long m = 0;
            long rank = 1;
            long dim = 0;
            long n = 0;
            long bound = 1;
            long bits = 128;
            long max_bits = 4096;
            std::string module;
            std::string nu;
            std::string orbit;
            std::string lambda = "1";
            std::string basis = "auto";
            std::string suite;
            bool merged = false;
        };

        Output cmd_orbits(const Options &o)
        {
            Output r;
            r.inputs = {{"m", o.m}};
            OrbitSet os = galois_orbits(o.m);
            json list = json::array();
            r.columns = {"representative", "size", "label"};
            for (const auto &orb : os.orbits)
            {
                std::string label = rank_one_label(o.m, orb.representative.residues);
                list.push_back({{"representative", orb.representative.residues},
                                {"size", orb.members.size()},
                                {"label", label}});
                r.rows.push_back(
                    {orb.representative.to_string(), std::to_string(orb.members.size()), label});
            }
            r.results = {{"m", o.m}, {"count", os.orbits.size()}, {"orbits", list}};
            return r;
        }

        Output cmd_tuples(const Options &o)
        {
            Output r;
            r.inputs = {{"m", o.m}};
            OrbitSet os = galois_orbits(o.m);
            json list = json::array();
            r.columns = {"tuple", "orbit"};
            for (const auto &t : all_tuples(o.m))
            {
                const auto &rep = os.orbits.at(static_cast<size_t>(os.find(t))).representative;
                list.push_back({{"tuple", t.residues}, {"orbit", rep.residues}});
                r.rows.push_back({t.to_string(), rep.to_string()});
            }
            r.results = {{"m", o.m}, {"count", list.size()}, {"tuples", list}};
            return r;
        }

        Output cmd_fix(const Options &o)
        {
            Output r;
            CyclotomicModule mod = o.module.empty() ? CyclotomicModule({{o.m, o.rank}}) : parse_module(o.module);
            if (o.module.empty())
                r.inputs = {{"m", o.m}, {"rank", o.rank}};
            else
                r.inputs = {{"module", o.module}};
            auto aut = LatticeAutomorphism::from_module(mod);
            FiniteAbelianGroup fix = fixed_locus(aut);
            r.results = {{"module", mod.to_string()},
                         {"order", aut.order()},
                         {"fix", group_json(fix)},
                         {"fix_name", fix.to_string()},
                         {"fix_order", fix.order().get_str()}};
            r.columns = {"module", "order", "fix"};
            r.rows.push_back({mod.to_string(), std::to_string(aut.order()), fix.to_string()});
            return r;
        }

        json family_json(const TorusFamily &f)
        {
            return {{"label", f.label},  {"m", f.m},          {"dim", f.dim},
                    {"types", f.types()}, {"module", f.module.to_string()}, {"fix", group_json(f.fix)},
                    {"fix_name", f.fix.to_string()}, {"p", f.p},   {"rigid", f.rigid()}};
        }

        Output cmd_moduli(const Options &o)
        {
            Output r;
            if (o.dim > 0)
            {
                r.inputs = {{"dim", o.dim}, {"m", o.m}};
                json list = json::array();
                r.columns = {"label", "types", "fix", "p", "rigid"};
                for (const auto &f : primary_families(o.dim, o.m))
                {
                    list.push_back(family_json(f));
                    r.rows.push_back(
                        {f.label, f.types_string(), f.fix.to_string(), std::to_string(f.p), f.rigid() ? "yes" : "no"});
                }
                r.results = {{"families", list}, {"count", list.size()}};
                return r;
            }
            r.inputs = {{"m", o.m}, {"rank", o.rank}};
            CyclotomicModule mod({{o.m, o.rank}});
            std::vector<ComplexStructure> classes;
            if (!o.nu.empty())
            {
                r.inputs["nu"] = o.nu;
                std::map<long, std::vector<long>> nu;
                if (o.m > 2)
                    nu[o.m] = parse_list(o.nu);
                classes.push_back(ComplexStructure(mod, nu).canonical());
            }
            else
                classes = hodge_classes(o.m, o.rank);
            json list = json::array();
            r.columns = {"structure", "p", "rigid"};
            for (const auto &cs : classes)
            {
                long p = moduli_dimension(cs);
                list.push_back({{"structure", cs.to_string()}, {"p", p}, {"rigid", is_rigid(cs)}});
                r.rows.push_back({cs.to_string(), std::to_string(p), is_rigid(cs) ? "yes" : "no"});
            }
            r.results = {{"module", mod.to_string()}, {"classes", list}};
            return r;
        }

        std::vector<long> residues_or_standard(const Options &o)
        {
            return o.orbit.empty() ? standard_residues(o.m) : parse_list(o.orbit);
        }

        AlternatingFormData form_for(const Options &o, const LambdaVector &lv, const std::vector<long> &res)
        {
            if (o.basis == "auto")
                return form_for_residues(lv, res);
            if (o.basis == "full")
                return build_form(lv, FormBasis::full);
            if (o.basis == "restricted")
                return build_form(lv, FormBasis::restricted);
            auto split = split_blocks(build_form(lv, FormBasis::restricted));
            auto it = split.blocks.find(o.m);
            if (it == split.blocks.end())
                throw InvalidInput("no primitive block for m = " + std::to_string(o.m));
            return it->second;
        }

        Output cmd_polarize(const Options &o)
        {
            Output r;
            auto res = residues_or_standard(o);
            LambdaVector lv = LambdaVector::parse(o.m, o.lambda);
            r.inputs = {{"m", o.m},       {"orbit", res},         {"lambda", o.lambda},
                        {"basis", o.basis}, {"bits", o.bits}, {"max_bits", o.max_bits}};
            AlternatingFormData f = form_for(o, lv, res);
            PolarizationReport rep = polarize(f, res, o.bits, o.max_bits);
            json diag = json::array();
            for (const auto &d : rep.gram_diagonal)
                diag.push_back(d.re.to_string(25));
            json type = nullptr;
            std::string type_s = "-";
            if (rep.type)
            {
                std::vector<std::string> t;
                for (const auto &x : *rep.type)
                    t.push_back(x.get_str());
                type = t;
                type_s = "(" + join(t, ",") + ")";
            }
            r.results = {{"lambda", lv.to_string()},
                         {"basis", to_string(f.basis)},
                         {"block_order", f.block_order},
                         {"rank", f.rank()},
                         {"invariant", rep.invariant},
                         {"riemann1", rep.riemann1},
                         {"posdef", to_string(rep.posdef)},
                         {"bits", rep.bits},
                         {"type", type},
                         {"principal", rep.principal()},
                         {"gram_diagonal", diag}};
            r.columns = {"lambda", "basis", "invariant", "riemann1", "posdef", "type", "principal"};
            r.rows.push_back({lv.to_string(), to_string(f.basis), rep.invariant ? "yes" : "no",
                              rep.riemann1 ? "yes" : "no", to_string(rep.posdef), type_s,
                              rep.principal() ? "yes" : "no"});
            if (rep.ok())
                r.status = "ok";
            else if (rep.invariant && rep.riemann1 && rep.posdef == PosDef::inconclusive)
                r.status = "inconclusive";
            else
                r.status = "verification_failed";
            return r;
        }

        Output cmd_search(const Options &o)
        {
            Output r;
            auto res = parse_list(o.orbit);
            r.inputs = {{"m", o.m}, {"orbit", res}, {"bound", o.bound}};
            auto found = search_lambda(o.m, res, o.bound);
            json list = json::array();
            r.columns = {"lambda"};
            for (const auto &lv : found)
            {
                list.push_back(lv.values());
                r.rows.push_back({lv.to_string()});
            }
            r.results = {{"count", found.size()}, {"lambdas", list}};
            r.status = found.empty() ? "verification_failed" : "ok";
            return r;
        }

        Output cmd_blocks(const Options &o)
        {
            Output r;
            LambdaVector lv = LambdaVector::parse(o.m, o.lambda);
            r.inputs = {{"m", o.m}, {"lambda", o.lambda}};
            AlternatingFormData f = build_form(lv, FormBasis::restricted);
            BlockSplit split = split_blocks(f);
            KernelInfo ker = kernel_rank(f);
            json list = json::array();
            r.columns = {"k", "rank", "det"};
            for (const auto &[k, b] : split.blocks)
            {
                std::string d = det(b.matrix).get_str();
                list.push_back({{"k", k}, {"rank", b.rank()}, {"det", d}});
                r.rows.push_back({std::to_string(k), std::to_string(b.rank()), d});
            }
            r.results = {{"modulus", f.modulus.to_string()},
                         {"rank", f.rank()},
                         {"kernel_deficiency", ker.deficiency},
                         {"cross_blocks_zero", split.cross_blocks_zero},
                         {"blocks", list}};
            r.status = split.cross_blocks_zero ? "ok" : "verification_failed";
            return r;
        }

        Output cmd_classify(const Options &o)
        {
            Output r;
            r.inputs = {{"n", o.n}, {"merged", o.merged}};
            auto fams = classify(o.n);
            long combos = 0;
            json list = json::array();
            if (o.merged)
            {
                r.columns = {"m", "B1", "B2", "types", "T_options", "p"};
                for (const auto &row : merge_rows(fams))
                {
                    json opts = json::array();
                    for (const auto &t : row.tr_options)
                        opts.push_back(group_json(t));
                    combos += static_cast<long>(row.tr_options.size());
                    list.push_back({{"m", row.m},
                                    {"b1_dim", row.b1_dim},
                                    {"b2", row.b2},
                                    {"variants", row.variants},
                                    {"tr_options", opts},
                                    {"p", row.p}});
                    r.rows.push_back({std::to_string(row.m), b1_label(row.b1_dim), row.b2, join(row.variants, " "),
                                      groups_to_string(row.tr_options), std::to_string(row.p)});
                }
            }
            else
            {
                r.columns = {"m", "B1", "B2", "types", "Fix", "T_options", "p"};
                for (const auto &f : fams)
                {
                    json opts = json::array();
                    for (const auto &t : f.tr_options)
                        opts.push_back(group_json(t));
                    combos += static_cast<long>(f.tr_options.size());
                    list.push_back({{"n", f.n},
                                    {"m", f.m},
                                    {"b1_dim", f.b1_dim},
                                    {"b2", family_json(f.b2)},
                                    {"tr_options", opts},
                                    {"p", f.p()}});
                    r.rows.push_back({std::to_string(f.m), b1_label(f.b1_dim), f.b2.label, f.b2.types_string(),
                                      f.b2.fix.to_string(), groups_to_string(f.tr_options), std::to_string(f.p())});
                }
            }
            r.results = {{"count", list.size()}, {"combinations", combos}, {"families", list}};
            return r;
        }

        Output cmd_verify(const Options &o)
        {
            Output r;
            r.inputs = {{"suite", o.suite}, {"bits", o.bits}, {"max_bits", o.max_bits}};
            VerifyOptions vo;
            vo.bits = o.bits;
            vo.max_bits = o.max_bits;
            SuiteReport rep = verify_suite(o.suite, vo);
            json rows = json::array();
            r.columns = {"row", "status", "details"};
            for (const auto &row : rep.rows)
            {
                json fields = json::object();
                std::vector<std::string> details;
                for (const auto &[k, v] : row.fields)
                {
                    fields[k] = v;
                    details.push_back(k + "=" + v);
                }
                rows.push_back({{"key", row.key}, {"status", row.status}, {"fields", fields}});
                r.rows.push_back({row.key, row.status, join(details, "; ")});
            }
            json unexpected = json::array(), stale = json::array();
            for (const auto &f : rep.unexpected)
                unexpected.push_back(flag_json(f));
            for (const auto &w : rep.stale)
                stale.push_back({{"table_id", w.table_id}, {"row_key", w.row_key}, {"column", w.column}});
            for (const auto &f : rep.flags)
                r.flags.push_back(flag_json(f));
            r.results = {{"suite", rep.suite},       {"rows", rows},   {"unexpected", unexpected},
                         {"stale_whitelist", stale}, {"failures", rep.failures}};
            if (rep.passed())
                r.status = "ok";
            else if (rep.inconclusive && rep.unexpected.empty() && rep.stale.empty())
                r.status = "inconclusive";
            else
                r.status = "verification_failed";
            return r;
        }

        // "--lambda -1,1,0" would read the value as an option; glue such values to their flag.
        std::vector<std::string> glue_negative_values(const std::vector<std::string> &args)
        {
            std::vector<std::string> out;
            for (size_t i = 0; i < args.size(); ++i)
            {
                const std::string &a = args[i];
                if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && i + 1 < args.size())
                {
                    const std::string &v = args[i + 1];
                    if (v.size() >= 2 && v[0] == '-' && (std::isdigit(static_cast<unsigned char>(v[1])) || v[1] == '('))
                    {
                        out.push_back(a + "=" + v);
                        ++i;
                        continue;
                    }
                }
                out.push_back(a);
            }
            return out;
        }
    } // namespace

    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        err << "bdfkit " << BDFKIT_VERSION << " (schema " << kSchemaVersion << ")\n";
        CLI::App app{"Finite-order automorphisms of complex tori and split BdF classification"};
        app.name("bdfkit");
        app.require_subcommand(1, 1);
        Options o;
        std::map<CLI::App *, std::function<Output(const Options &)>> handlers;

        auto add = [&](const std::string &name, const std::string &help, auto handler) {
            CLI::App *sub = app.add_subcommand(name, help);
            sub->add_option("--format", o.format, "Output format")
                ->check(CLI::IsMember({"json", "csv", "md"}))
                ->capture_default_str();
            handlers[sub] = handler;
            return sub;
        };

        auto *orbits = add("orbits", "Galois orbits of character tuples mod m", cmd_orbits);
        orbits->add_option("--m", o.m, "Order m >= 3")->required();

        auto *tuples = add("tuples", "All character tuples mod m with their orbits", cmd_tuples);
        tuples->add_option("--m", o.m, "Order m >= 3")->required();

        auto *fix = add("fix", "Fixed locus of a cyclotomic module automorphism", cmd_fix);
        fix->add_option("--m", o.m, "Order of the single component");
        fix->add_option("--rank", o.rank, "Copies of R_m")->capture_default_str();
        fix->add_option("--module", o.module, "Components k:r, comma separated (e.g. 2:2,4:1)");

        auto *moduli = add("moduli", "Hodge classes and moduli counts", cmd_moduli);
        moduli->add_option("--m", o.m, "Eigenvalue order")->required();
        moduli->add_option("--rank", o.rank, "Copies of R_m")->capture_default_str();
        moduli->add_option("--nu", o.nu, "Hodge multiplicities per conjugate pair");
        moduli->add_option("--dim", o.dim, "List primary families of this dimension instead");

        auto *pol = add("polarize", "Check a lambda-vector form against a complex structure", cmd_polarize);
        pol->add_option("--m", o.m, "Order m >= 3")->required();
        pol->add_option("--orbit", o.orbit, "Chosen residues (default: all j < m/2)");
        pol->add_option("--lambda", o.lambda, "lambda_1,...; a^k shorthand allowed")->capture_default_str();
        pol->add_option("--basis", o.basis, "Lattice")
            ->check(CLI::IsMember({"auto", "full", "restricted", "block"}))
            ->capture_default_str();
        pol->add_option("--bits", o.bits, "Initial interval precision")->capture_default_str();
        pol->add_option("--max-bits", o.max_bits, "Precision cap")->capture_default_str();

        auto *search = add("search-lambda", "Search lambda-vectors with bounded entries", cmd_search);
        search->add_option("--m", o.m, "Order m >= 3")->required();
        search->add_option("--orbit", o.orbit, "Chosen residues")->required();
        search->add_option("--bound", o.bound, "Entry bound (1 to 3)")->capture_default_str();

        auto *blocks = add("blocks", "Split the restricted form into cyclotomic blocks", cmd_blocks);
        blocks->add_option("--m", o.m, "Order m >= 3")->required();
        blocks->add_option("--lambda", o.lambda, "lambda_1,...")->capture_default_str();

        auto *cls = add("classify", "Split BdF families of dimension n", cmd_classify);
        cls->add_option("--n", o.n, "Dimension 1 to 4")->required();
        cls->add_flag("--merged", o.merged, "Merge type variants into table rows");

        auto *ver = add("verify", "Compare computations with the transcribed tables", cmd_verify);
        ver->add_option("--suite", o.suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
        ver->add_option("--bits", o.bits, "Initial interval precision")->capture_default_str();
        ver->add_option("--max-bits", o.max_bits, "Precision cap")->capture_default_str();

        std::vector<std::string> argv = glue_negative_values(args);
        std::reverse(argv.begin(), argv.end());
        try
        {
            app.parse(argv);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return kOk;
        }
        catch (const CLI::ParseError &e)
        {
            err << "error: " << e.what() << "\n" << app.help();
            return kBadInput;
        }

        CLI::App *chosen = app.get_subcommands().front();
        Output result;
        try
        {
            if (chosen == fix && o.module.empty() && o.m == 0)
                throw InvalidInput("fix needs --m or --module");
            if (o.bits < 32 || o.max_bits < o.bits)
                throw InvalidInput("need 32 <= --bits <= --max-bits");
            result = handlers.at(chosen)(o);
        }
        catch (const InvalidInput &e)
        {
            err << "error: " << e.what() << "\n";
            return kBadInput;
        }
        catch (const DomainError &e)
        {
            err << "error: " << e.what() << "\n";
            return kBadInput;
        }
        catch (const ConfigurationError &e)
        {
            err << "configuration error: " << e.what() << "\n";
            return kBadInput;
        }
        render(chosen->get_name(), result, o.format, out);
        return exit_code(result.status);
    }

} // namespace bdf::cli
