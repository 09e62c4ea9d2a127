#include "bdfkit/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bdfkit/cycnum.hpp"
#include "bdfkit/orbits.hpp"
#include "bdfkit/polarization.hpp"

#ifndef BDFKIT_DEFAULT_FIXTURE_DIR
#define BDFKIT_DEFAULT_FIXTURE_DIR "data/fixtures"
#endif

namespace bdf
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            size_t b = s.find_first_not_of(" \t\r");
            if (b == std::string::npos)
                return "";
            size_t e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        std::vector<std::string> split(const std::string &s, const std::string &sep)
        {
            std::vector<std::string> out;
            size_t start = 0;
            while (true)
            {
                size_t pos = s.find(sep, start);
                out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
                if (pos == std::string::npos)
                    break;
                start = pos + sep.size();
            }
            return out;
        }

        long parse_long(const std::string &s, const std::string &what)
        {
            try
            {
                size_t used = 0;
                long v = std::stol(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(s);
                return v;
            }
            catch (const std::exception &)
            {
                throw ConfigurationError("fixture " + what + ": expected an integer, got '" + s + "'");
            }
        }

        FiniteAbelianGroup parse_group(const std::string &s, const std::string &what)
        {
            try
            {
                return FiniteAbelianGroup::parse(s);
            }
            catch (const std::exception &e)
            {
                throw ConfigurationError("fixture " + what + ": bad group '" + s + "' (" + e.what() + ")");
            }
        }

        std::vector<long> parse_types(const std::string &s, const std::string &what)
        {
            std::string t = s;
            if (t.size() < 2 || t.front() != '(' || t.back() != ')')
                throw ConfigurationError("fixture " + what + ": bad types '" + s + "'");
            std::vector<long> out;
            for (const auto &part : split(t.substr(1, t.size() - 2), ","))
                out.push_back(parse_long(part, what));
            return out;
        }

        std::vector<FiniteAbelianGroup> parse_group_list(const std::string &s, const std::string &what)
        {
            std::vector<FiniteAbelianGroup> out;
            for (const auto &part : split(s, ", "))
                out.push_back(parse_group(part, what));
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        }

        std::string alias(const std::string &token)
        {
            if (token == "E'")
                return "E";
            if (token == "S'")
                return "S";
            if (token == "X")
                return "T";
            return token;
        }

        std::vector<std::string> expand_tokens(const std::string &label)
        {
            std::vector<std::string> out;
            for (const auto &raw : split(label, " x "))
            {
                std::string tok = trim(raw);
                size_t caret = tok.rfind('^');
                bool family = tok.rfind("X_", 0) == 0 || tok.rfind("Y_", 0) == 0;
                if (caret != std::string::npos && !family && tok.find('(') == std::string::npos)
                {
                    std::string exp = tok.substr(caret + 1);
                    if (!exp.empty() && std::all_of(exp.begin(), exp.end(), ::isdigit))
                    {
                        long n = std::stol(exp);
                        for (long i = 0; i < n; ++i)
                            out.push_back(alias(tok.substr(0, caret)));
                        continue;
                    }
                }
                out.push_back(alias(tok));
            }
            return out;
        }

        long b1_dim_of(const std::string &s, const std::string &what)
        {
            for (long d = 1; d <= 3; ++d)
                if (s == b1_label(d))
                    return d;
            throw ConfigurationError("fixture " + what + ": unknown B1 '" + s + "'");
        }

        using TorusKey = std::pair<long, std::vector<std::pair<std::string, long>>>;

        TorusKey torus_key(const TorusFamily &f)
        {
            TorusKey key{f.m, {}};
            for (const auto &a : f.factors)
                key.second.emplace_back(a.label, a.k);
            std::sort(key.second.begin(), key.second.end());
            return key;
        }

        std::string sorted_name(const std::vector<std::string> &tokens)
        {
            std::vector<std::string> t = tokens;
            std::sort(t.begin(), t.end());
            std::string s;
            for (const auto &x : t)
                s += (s.empty() ? "" : " x ") + x;
            return s;
        }

        struct Comparison
        {
            std::vector<SuiteRow> rows;
            std::vector<DiscrepancyFlag> flags;
        };

        void add_flag(Comparison &c, SuiteRow &row, const std::string &table, const std::string &column,
                      const std::string &computed, const std::string &printed)
        {
            c.flags.push_back(DiscrepancyFlag{table, row.key, column, computed, printed, ""});
            row.status = "discrepancy";
        }

        Comparison compare_torus(const std::vector<TorusFamily> &computed, const FixtureTable &fx)
        {
            bool has_types = std::find(fx.header.begin(), fx.header.end(), "Types") != fx.header.end();
            std::map<TorusKey, const TorusFamily *> index;
            for (const auto &f : computed)
                index[torus_key(f)] = &f;
            std::set<TorusKey> seen;
            Comparison c;
            for (size_t i = 0; i < fx.rows.size(); ++i)
            {
                std::string what = fx.id + " row " + std::to_string(i + 2);
                long m = parse_long(fx.cell(i, "m"), what);
                const std::string &label = fx.cell(i, "T");
                const std::string &fix_text = fx.cell(i, "Fix");
                FiniteAbelianGroup fix = parse_group(fix_text, what);
                long p = parse_long(fx.cell(i, "p"), what);
                std::vector<long> types;
                if (has_types)
                    types = parse_types(fx.cell(i, "Types"), what);
                for (const auto &tokens : expand_printed_label(label))
                {
                    TorusKey key{m, {}};
                    if (has_types && types.size() != tokens.size())
                        throw ConfigurationError("fixture " + what + ": label and types disagree in length");
                    for (size_t j = 0; j < tokens.size(); ++j)
                        key.second.emplace_back(tokens[j], has_types ? types[j] : m);
                    std::sort(key.second.begin(), key.second.end());
                    auto it = index.find(key);
                    SuiteRow row;
                    row.status = "match";
                    if (it == index.end())
                    {
                        row.key = std::to_string(m) + " | " + label + (has_types ? " | " + fx.cell(i, "Types") : "");
                        row.fields = {{"m", std::to_string(m)}, {"T", label}, {"Fix (printed)", fix_text},
                                      {"p (printed)", std::to_string(p)}};
                        add_flag(c, row, fx.id, "row", "absent", label);
                        c.rows.push_back(row);
                        continue;
                    }
                    const TorusFamily &f = *it->second;
                    seen.insert(key);
                    row.key = f.key();
                    row.fields = {{"m", std::to_string(m)},
                                  {"T", f.label},
                                  {"types", f.types_string()},
                                  {"Fix", f.fix.to_string()},
                                  {"Fix (printed)", fix_text},
                                  {"p", std::to_string(f.p)},
                                  {"p (printed)", std::to_string(p)}};
                    if (!(f.fix == fix))
                        add_flag(c, row, fx.id, "Fix", f.fix.to_string(), fix_text);
                    if (f.p != p)
                        add_flag(c, row, fx.id, "p", std::to_string(f.p), std::to_string(p));
                    c.rows.push_back(row);
                }
            }
            for (const auto &f : computed)
                if (!seen.count(torus_key(f)))
                {
                    SuiteRow row;
                    row.key = f.key();
                    row.fields = {{"m", std::to_string(f.m)},
                                  {"T", f.label},
                                  {"types", f.types_string()},
                                  {"Fix", f.fix.to_string()},
                                  {"p", std::to_string(f.p)}};
                    add_flag(c, row, fx.id, "row", f.label, "absent");
                    c.rows.push_back(row);
                }
            return c;
        }

        Comparison compare_bdf(const std::vector<BdFRow> &computed, const FixtureTable &fx)
        {
            bool has_options = std::find(fx.header.begin(), fx.header.end(), "T_options") != fx.header.end();
            bool has_p = std::find(fx.header.begin(), fx.header.end(), "p") != fx.header.end();
            using Key = std::tuple<long, long, std::string>;
            std::map<Key, const BdFRow *> index;
            for (const auto &r : computed)
                index[Key{r.m, r.b1_dim, sorted_name(split(r.b2, " x "))}] = &r;
            std::set<Key> seen;
            Comparison c;
            for (size_t i = 0; i < fx.rows.size(); ++i)
            {
                std::string what = fx.id + " row " + std::to_string(i + 2);
                long m = parse_long(fx.cell(i, "m"), what);
                long b1 = b1_dim_of(fx.cell(i, "B1"), what);
                const std::string &b2_text = fx.cell(i, "B2");
                Key key{m, b1, sorted_name(expand_tokens(b2_text))};
                SuiteRow row;
                row.status = "match";
                auto it = index.find(key);
                if (it == index.end())
                {
                    row.key = std::to_string(m) + " | " + b1_label(b1) + " | " + b2_text;
                    row.fields = {{"m", std::to_string(m)}, {"B1", b1_label(b1)}, {"B2", b2_text}};
                    add_flag(c, row, fx.id, "row", "absent", b2_text);
                    c.rows.push_back(row);
                    continue;
                }
                const BdFRow &r = *it->second;
                seen.insert(key);
                row.key = r.key();
                row.fields = {{"m", std::to_string(m)}, {"B1", b1_label(b1)}, {"B2", r.b2}};
                std::string variants;
                for (const auto &v : r.variants)
                    variants += (variants.empty() ? "" : " ") + v;
                row.fields.emplace_back("types", variants);
                row.fields.emplace_back("T_options", groups_to_string(r.tr_options));
                if (has_options)
                {
                    const std::string &printed = fx.cell(i, "T_options");
                    row.fields.emplace_back("T_options (printed)", printed);
                    if (parse_group_list(printed, what) != r.tr_options)
                        add_flag(c, row, fx.id, "T_options", groups_to_string(r.tr_options), printed);
                }
                if (has_p)
                {
                    long p = parse_long(fx.cell(i, "p"), what);
                    row.fields.emplace_back("p", std::to_string(r.p));
                    row.fields.emplace_back("p (printed)", std::to_string(p));
                    if (p != r.p)
                        add_flag(c, row, fx.id, "p", std::to_string(r.p), std::to_string(p));
                }
                c.rows.push_back(row);
            }
            for (const auto &r : computed)
                if (!seen.count(Key{r.m, r.b1_dim, sorted_name(split(r.b2, " x "))}))
                {
                    SuiteRow row;
                    row.key = r.key();
                    row.fields = {{"m", std::to_string(r.m)},
                                  {"B1", b1_label(r.b1_dim)},
                                  {"B2", r.b2},
                                  {"T_options", groups_to_string(r.tr_options)}};
                    add_flag(c, row, fx.id, "row", r.b2, "absent");
                    c.rows.push_back(row);
                }
            return c;
        }

        std::vector<TorusFamily> computed_torus_table(const std::string &id)
        {
            if (id == "table1")
                return all_families(2);
            if (id == "table2")
                return all_families(3);
            std::vector<TorusFamily> out;
            for (long m : admissible_orders(5))
                for (auto &f : primary_families(4, m))
                    out.push_back(std::move(f));
            return out;
        }

        long bdf_dimension(const std::string &id) { return id == "table4" ? 2 : id == "table5" ? 3 : 4; }

        Comparison compare_by_id(const std::string &id, const FixtureTable &fx)
        {
            if (id == "table1" || id == "table2" || id == "table3")
                return compare_torus(computed_torus_table(id), fx);
            return compare_bdf(merge_rows(classify(bdf_dimension(id))), fx);
        }

        // "X_15^2" -> (15, "X_30^(2)"); "S_8''" -> (8, "S_8''").
        std::pair<long, std::string> parse_case(const std::string &text)
        {
            size_t us = text.find('_');
            if (us == std::string::npos)
                throw ConfigurationError("table7: bad case '" + text + "'");
            size_t end = us + 1;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])))
                ++end;
            long m = parse_long(text.substr(us + 1, end - us - 1), "table7 case");
            if (text[0] != 'X')
                return {m, text};
            if (end >= text.size() || text[end] != '^')
                throw ConfigurationError("table7: bad case '" + text + "'");
            std::string idx = text.substr(end + 1);
            long family = m == 15 ? 30 : m;
            return {m, "X_" + std::to_string(family) + "^(" + idx + ")"};
        }

        std::string residues_string(const std::vector<long> &r)
        {
            std::string s = "(";
            for (size_t i = 0; i < r.size(); ++i)
                s += (i ? "," : "") + std::to_string(r[i]);
            return s + ")";
        }

        Comparison verify_table7(const FixtureTable &fx, const VerifyOptions &opts, long &failures, bool &inconclusive)
        {
            Comparison c;
            for (size_t i = 0; i < fx.rows.size(); ++i)
            {
                const std::string &case_text = fx.cell(i, "Case");
                const std::string &orbit_text = fx.cell(i, "Orbit");
                const std::string &lambda_text = fx.cell(i, "lambda");
                auto [m, label] = parse_case(case_text);
                SuiteRow row;
                row.key = case_text;
                row.status = "pass";
                row.fields = {{"case", case_text}, {"m", std::to_string(m)}, {"orbit (printed)", orbit_text},
                              {"lambda (printed)", lambda_text}};

                auto class_residues = rank_one_residues(label, m);
                if (!class_residues)
                    throw ConfigurationError("table7: unknown case '" + case_text + "'");
                std::vector<long> residues;
                try
                {
                    CharacterTuple t = CharacterTuple::parse(m, orbit_text);
                    if (!t.is_full())
                        throw InvalidInput("tuple does not pick one residue per conjugate pair");
                    residues = t.residues;
                    std::string got = rank_one_label(m, residues);
                    if (got != label)
                        add_flag(c, row, fx.id, "orbit", "tuple lies in " + got, orbit_text);
                }
                catch (const InvalidInput &e)
                {
                    residues = *class_residues;
                    add_flag(c, row, fx.id, "orbit", std::string("invalid tuple: ") + e.what(), orbit_text);
                }
                row.fields.emplace_back("orbit (checked)", residues_string(residues));

                std::vector<long> values;
                try
                {
                    values = LambdaVector::expand_shorthand(lambda_text);
                }
                catch (const InvalidInput &)
                {
                    throw ConfigurationError("table7: bad lambda '" + lambda_text + "'");
                }
                row.fields.emplace_back("lambda length", std::to_string(values.size()));
                if (static_cast<long>(values.size()) > m / 2)
                {
                    add_flag(c, row, fx.id, "lambda",
                             "unparseable as printed: " + std::to_string(values.size()) + " entries > " +
                                 std::to_string(m / 2),
                             lambda_text);
                    row.status = "unparseable";
                    if (opts.recovery_bound > 0)
                    {
                        auto found = search_lambda(m, residues, opts.recovery_bound);
                        row.fields.emplace_back("recovered", std::to_string(found.size()));
                        if (!found.empty())
                            row.fields.emplace_back("recovered lambda", found.front().to_string());
                        else
                            ++failures;
                    }
                    c.rows.push_back(row);
                    continue;
                }
                LambdaVector lv = LambdaVector::make(m, values);
                row.fields.emplace_back("lambda", lv.to_string());
                AlternatingFormData f = form_for_residues(lv, residues);
                row.fields.emplace_back("basis", to_string(f.basis));
                std::vector<long> conj;
                for (long r : residues)
                    conj.push_back(m - r);
                std::sort(conj.begin(), conj.end());
                std::string witness;
                PolarizationReport rep = polarize(f, residues, opts.bits, opts.max_bits);
                if (rep.ok())
                    witness = "stated tuple";
                else
                {
                    PolarizationReport rc = polarize(f, conj, opts.bits, opts.max_bits);
                    if (rc.ok())
                    {
                        witness = "conjugate tuple " + residues_string(conj);
                        rep = std::move(rc);
                    }
                    else if (rep.posdef == PosDef::inconclusive || rc.posdef == PosDef::inconclusive)
                        inconclusive = true;
                }
                row.fields.emplace_back("invariant", rep.invariant ? "yes" : "no");
                row.fields.emplace_back("riemann1", rep.riemann1 ? "yes" : "no");
                row.fields.emplace_back("posdef", to_string(rep.posdef));
                if (witness.empty())
                {
                    row.status = "fail";
                    ++failures;
                }
                else
                {
                    row.fields.emplace_back("certified on", witness);
                    if (rep.type)
                    {
                        std::string t;
                        for (const auto &d : *rep.type)
                            t += (t.empty() ? "" : ",") + to_string(d);
                        row.fields.emplace_back("type", "(" + t + ")");
                    }
                }
                c.rows.push_back(row);
            }
            return c;
        }

        std::string join_longs(const std::vector<long> &v)
        {
            std::string s;
            for (long x : v)
                s += (s.empty() ? "" : ", ") + std::to_string(x);
            return s;
        }

        std::pair<long, long> parse_pair(const std::string &s, const std::string &what)
        {
            auto parts = split(s, ",");
            if (parts.size() != 2)
                throw ConfigurationError("fixture " + what + ": expected 'a,b', got '" + s + "'");
            return {parse_long(parts[0], what), parse_long(parts[1], what)};
        }

        Comparison verify_propositions(const FixtureTable &fx)
        {
            Comparison c;
            for (size_t i = 0; i < fx.rows.size(); ++i)
            {
                std::string what = fx.id + " row " + std::to_string(i + 2);
                const std::string &kind = fx.cell(i, "kind");
                const std::string &key = fx.cell(i, "key");
                const std::string &printed = fx.cell(i, "value");
                SuiteRow row;
                row.key = kind + " " + key;
                row.status = "match";
                std::string computed;
                if (kind == "orbit_reps")
                {
                    long m = parse_long(key, what);
                    OrbitSet os = galois_orbits(m);
                    std::set<long> hit;
                    bool valid = true;
                    auto reps = split(printed, ";");
                    for (const auto &r : reps)
                    {
                        try
                        {
                            long idx = os.find(CharacterTuple::parse(m, r));
                            valid = valid && idx >= 0 && hit.insert(idx).second;
                        }
                        catch (const InvalidInput &)
                        {
                            valid = false;
                        }
                    }
                    valid = valid && hit.size() == os.orbits.size();
                    std::string got;
                    for (const auto &o : os.orbits)
                        got += (got.empty() ? "" : "; ") + o.representative.to_string();
                    row.fields.emplace_back("orbits", got);
                    computed = valid ? printed : "orbits " + got;
                }
                else if (kind == "orbit_count")
                    computed = std::to_string(galois_orbits(parse_long(key, what)).orbits.size());
                else if (kind == "primary_count")
                {
                    auto [d, m] = parse_pair(key, what);
                    auto fams = primary_families(d, m);
                    bool rigid = std::all_of(fams.begin(), fams.end(), [](const TorusFamily &f) { return f.rigid(); });
                    row.fields.emplace_back("all rigid", rigid ? "yes" : "no");
                    computed = std::to_string(fams.size());
                }
                else if (kind == "nonrigid_moduli")
                {
                    auto [d, m] = parse_pair(key, what);
                    std::vector<long> ps;
                    for (const auto &a : atoms(m, d))
                        if (!is_rigid(a.hodge))
                            ps.push_back(a.p);
                    std::sort(ps.begin(), ps.end());
                    computed = join_longs(ps);
                }
                else if (kind == "family_count")
                    computed = std::to_string(all_families(parse_long(key, what)).size());
                else if (kind == "bdf_count")
                {
                    long combos = 0;
                    long n = parse_long(key, what);
                    for (const auto &f : classify(n))
                        combos += static_cast<long>(f.tr_options.size());
                    computed = std::to_string(combos);
                }
                else if (kind == "gram_diagonal")
                {
                    // lambda = (1) on the restricted lattice, standard structure, m = 3..12
                    bool matches_2m = true, matches_2n = true;
                    for (long m = 3; m <= 12; ++m)
                    {
                        auto res = standard_residues(m);
                        auto f = build_form(LambdaVector::make(m, {1}), FormBasis::restricted);
                        GramResult g = gram_and_posdef(f, res, 128, 128);
                        for (size_t k = 0; k < res.size(); ++k)
                        {
                            ComplexInterval s = root_of_unity(res[k], m, 256);
                            Interval two_m = s.im.scaled(Rational(2 * m));
                            Interval two_n = s.im.scaled(Rational(2 * (m - 1)));
                            matches_2m = matches_2m && intervals_intersect(g.diagonal[k].re, two_m);
                            matches_2n = matches_2n && intervals_intersect(g.diagonal[k].re, two_n);
                        }
                    }
                    computed = matches_2n ? printed : matches_2m ? "2m sin(2 pi k/m)" : "neither 2m nor 2n sin";
                }
                else
                    throw ConfigurationError("fixture " + what + ": unknown kind '" + kind + "'");
                row.fields.emplace_back("computed", computed);
                row.fields.emplace_back("printed", printed);
                if (computed != printed)
                    add_flag(c, row, fx.id, "value", computed, printed);
                c.rows.push_back(row);
            }
            return c;
        }

        const std::map<std::string, std::vector<std::string>> &required_columns()
        {
            static const std::map<std::string, std::vector<std::string>> cols = {
                {"table1", {"m", "T", "Fix", "Types", "p"}},
                {"table2", {"m", "T", "Fix", "Types", "p"}},
                {"table3", {"m", "T", "Fix", "p"}},
                {"table4", {"m", "B1", "B2", "T_options", "p"}},
                {"table5", {"m", "B1", "B2", "T_options"}},
                {"table6", {"m", "B1", "B2"}},
                {"table7", {"Case", "Orbit", "lambda"}},
                {"propositions", {"kind", "key", "value"}},
                {"whitelist", {"table_id", "row_key", "column", "note"}},
            };
            return cols;
        }
    } // namespace

    long FixtureTable::column(const std::string &name) const
    {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw ConfigurationError("fixture " + id + " has no column '" + name + "'");
        return it - header.begin();
    }

    const std::string &FixtureTable::cell(size_t row, const std::string &name) const
    {
        return rows.at(row).at(static_cast<size_t>(column(name)));
    }

    std::string fixture_dir()
    {
        const char *env = std::getenv("BDFKIT_FIXTURES");
        return env && *env ? env : BDFKIT_DEFAULT_FIXTURE_DIR;
    }

    FixtureTable load_fixture(const std::string &id, const std::string &dir)
    {
        std::string path = (dir.empty() ? fixture_dir() : dir) + "/" + id + ".tsv";
        std::ifstream in(path);
        if (!in)
            throw ConfigurationError("fixture not found: " + path);
        FixtureTable t;
        t.id = id;
        std::string line;
        long lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, '\t'))
                cells.push_back(cell);
            if (line.back() == '\t')
                cells.emplace_back();
            if (t.header.empty())
                t.header = cells;
            else if (cells.size() != t.header.size())
                throw ConfigurationError(path + ":" + std::to_string(lineno) + ": expected " +
                                         std::to_string(t.header.size()) + " columns, found " +
                                         std::to_string(cells.size()));
            else
                t.rows.push_back(cells);
        }
        if (t.header.empty())
            throw ConfigurationError("fixture is empty: " + path);
        auto req = required_columns().find(id);
        if (req != required_columns().end())
            for (const auto &c : req->second)
                t.column(c);
        return t;
    }

    std::vector<WhitelistEntry> load_whitelist(const std::string &dir)
    {
        FixtureTable t = load_fixture("whitelist", dir);
        std::vector<WhitelistEntry> out;
        for (size_t i = 0; i < t.rows.size(); ++i)
            out.push_back(WhitelistEntry{t.cell(i, "table_id"), t.cell(i, "row_key"), t.cell(i, "column"),
                                         t.cell(i, "note")});
        return out;
    }

    const WhitelistEntry *find_whitelisted(const DiscrepancyFlag &flag, const std::vector<WhitelistEntry> &whitelist)
    {
        for (const auto &w : whitelist)
            if (w.table_id == flag.table_id && w.row_key == flag.row_key && w.column == flag.column)
                return &w;
        return nullptr;
    }

    std::vector<std::vector<std::string>> expand_printed_label(const std::string &label)
    {
        size_t pos = label.find(", i=");
        if (pos == std::string::npos)
            return {expand_tokens(label)};
        std::string base = label.substr(0, pos);
        auto range = split(label.substr(pos + 4), ",");
        long n = parse_long(range.back(), "label '" + label + "'");
        size_t slot = base.find("(i)");
        if (slot == std::string::npos)
            throw ConfigurationError("label '" + label + "' has a range but no (i)");
        std::vector<std::vector<std::string>> out;
        for (long j = 1; j <= n; ++j)
        {
            std::string b = base;
            b.replace(slot, 3, "(" + std::to_string(j) + ")");
            out.push_back(expand_tokens(b));
        }
        return out;
    }

    std::vector<DiscrepancyFlag> compare_with_fixture(const std::vector<TorusFamily> &computed,
                                                      const FixtureTable &fixture)
    {
        return compare_torus(computed, fixture).flags;
    }

    std::vector<DiscrepancyFlag> compare_with_fixture(const std::vector<BdFRow> &computed, const FixtureTable &fixture)
    {
        return compare_bdf(computed, fixture).flags;
    }

    std::vector<DiscrepancyFlag> compare_with_fixture(const std::string &fixture_id, const std::string &dir)
    {
        if (fixture_id == "table7" || fixture_id == "propositions")
            return verify_suite(fixture_id, VerifyOptions{128, 4096, 1, dir}).flags;
        static const std::set<std::string> known = {"table1", "table2", "table3", "table4", "table5", "table6"};
        if (!known.count(fixture_id))
            throw InvalidInput("unknown fixture '" + fixture_id + "'");
        return compare_by_id(fixture_id, load_fixture(fixture_id, dir)).flags;
    }

    std::vector<std::string> suite_names()
    {
        return {"table1", "table2", "table3", "table4", "table5", "table6", "table7", "propositions"};
    }

    SuiteReport verify_suite(const std::string &suite, const VerifyOptions &opts)
    {
        auto names = suite_names();
        if (std::find(names.begin(), names.end(), suite) == names.end())
            throw InvalidInput("unknown suite '" + suite + "'");
        FixtureTable fx = load_fixture(suite, opts.dir);
        auto whitelist = load_whitelist(opts.dir);
        SuiteReport rep;
        rep.suite = suite;
        Comparison c;
        if (suite == "table7")
            c = verify_table7(fx, opts, rep.failures, rep.inconclusive);
        else if (suite == "propositions")
            c = verify_propositions(fx);
        else
            c = compare_by_id(suite, fx);
        std::set<std::tuple<std::string, std::string, std::string>> raised;
        for (auto &f : c.flags)
        {
            raised.emplace(f.table_id, f.row_key, f.column);
            if (const WhitelistEntry *w = find_whitelisted(f, whitelist))
                f.note = w->note;
            else
                rep.unexpected.push_back(f);
        }
        for (auto &row : c.rows)
            if (row.status == "discrepancy")
            {
                bool all_known = true;
                for (const auto &f : c.flags)
                    if (f.row_key == row.key && f.note.empty())
                        all_known = false;
                if (all_known)
                    row.status = "known discrepancy";
            }
        for (const auto &w : whitelist)
            if (w.table_id == suite && !raised.count({w.table_id, w.row_key, w.column}))
                rep.stale.push_back(w);
        rep.rows = std::move(c.rows);
        rep.flags = std::move(c.flags);
        return rep;
    }

} // namespace bdf
