#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bdfkit/bdf.hpp"
#include "bdfkit/cli.hpp"
#include "bdfkit/fixtures.hpp"
#include "bdfkit/orbits.hpp"
#include "bdfkit/polarization.hpp"
#include "bdfkit/torus.hpp"

namespace py = pybind11;

namespace
{
    py::int_ to_py(const bdf::Integer &z) { return py::int_(py::str(z.get_str())); }

    py::dict family_dict(const bdf::TorusFamily &f)
    {
        py::dict d;
        d["label"] = f.label;
        d["m"] = f.m;
        d["dim"] = f.dim;
        d["types"] = f.types();
        d["fix"] = f.fix.invariant_factors();
        d["p"] = f.p;
        d["rigid"] = f.rigid();
        return d;
    }

    std::vector<std::vector<long>> orbit_representatives(long m)
    {
        std::vector<std::vector<long>> out;
        for (const auto &o : bdf::galois_orbits(m).orbits)
            out.push_back(o.representative.residues);
        return out;
    }

    std::vector<long> fixed_locus(const std::vector<std::pair<long, long>> &components)
    {
        auto aut = bdf::LatticeAutomorphism::from_module(bdf::CyclotomicModule(components));
        return bdf::fixed_locus(aut).invariant_factors();
    }

    py::list hodge_classes(long k, long r)
    {
        py::list out;
        for (const auto &cs : bdf::hodge_classes(k, r))
        {
            py::dict d;
            d["structure"] = cs.to_string();
            d["p"] = bdf::moduli_dimension(cs);
            d["rigid"] = bdf::is_rigid(cs);
            out.append(d);
        }
        return out;
    }

    py::dict polarize(long m, const std::string &lambda, std::vector<long> orbit, long bits, long max_bits)
    {
        if (orbit.empty())
            orbit = bdf::standard_residues(m);
        auto lv = bdf::LambdaVector::parse(m, lambda);
        auto form = bdf::form_for_residues(lv, orbit);
        auto rep = bdf::polarize(form, orbit, bits, max_bits);
        py::dict d;
        d["basis"] = bdf::to_string(form.basis);
        d["rank"] = form.rank();
        d["invariant"] = rep.invariant;
        d["riemann1"] = rep.riemann1;
        d["posdef"] = bdf::to_string(rep.posdef);
        d["ok"] = rep.ok();
        d["principal"] = rep.principal();
        if (rep.type)
        {
            py::list t;
            for (const auto &x : *rep.type)
                t.append(to_py(x));
            d["type"] = t;
        }
        else
            d["type"] = py::none();
        return d;
    }

    std::vector<std::vector<long>> search_lambda(long m, const std::vector<long> &orbit, long bound)
    {
        std::vector<std::vector<long>> out;
        for (const auto &lv : bdf::search_lambda(m, orbit, bound))
            out.push_back(lv.values());
        return out;
    }

    py::list primary_families(long d, long m)
    {
        py::list out;
        for (const auto &f : bdf::primary_families(d, m))
            out.append(family_dict(f));
        return out;
    }

    py::list classify(long n, bool merged)
    {
        py::list out;
        auto fams = bdf::classify(n);
        if (merged)
        {
            for (const auto &r : bdf::merge_rows(fams))
            {
                py::dict d;
                d["m"] = r.m;
                d["b1_dim"] = r.b1_dim;
                d["b2"] = r.b2;
                d["variants"] = r.variants;
                std::vector<std::vector<long>> opts;
                for (const auto &t : r.tr_options)
                    opts.push_back(t.invariant_factors());
                d["tr_options"] = opts;
                d["p"] = r.p;
                out.append(d);
            }
            return out;
        }
        for (const auto &f : fams)
        {
            py::dict d;
            d["m"] = f.m;
            d["b1_dim"] = f.b1_dim;
            d["b2"] = family_dict(f.b2);
            std::vector<std::vector<long>> opts;
            for (const auto &t : f.tr_options)
                opts.push_back(t.invariant_factors());
            d["tr_options"] = opts;
            d["p"] = f.p();
            out.append(d);
        }
        return out;
    }

    py::dict verify(const std::string &suite, long bits, long max_bits)
    {
        bdf::VerifyOptions opts;
        opts.bits = bits;
        opts.max_bits = max_bits;
        auto rep = bdf::verify_suite(suite, opts);
        py::list rows;
        for (const auto &r : rep.rows)
        {
            py::dict d;
            d["key"] = r.key;
            d["status"] = r.status;
            py::dict fields;
            for (const auto &[k, v] : r.fields)
                fields[py::str(k)] = v;
            d["fields"] = fields;
            rows.append(d);
        }
        auto flags = [](const std::vector<bdf::DiscrepancyFlag> &fs) {
            py::list l;
            for (const auto &f : fs)
            {
                py::dict d;
                d["table_id"] = f.table_id;
                d["row_key"] = f.row_key;
                d["column"] = f.column;
                d["computed_value"] = f.computed_value;
                d["printed_value"] = f.printed_value;
                d["note"] = f.note;
                l.append(d);
            }
            return l;
        };
        py::dict d;
        d["suite"] = rep.suite;
        d["rows"] = rows;
        d["flags"] = flags(rep.flags);
        d["unexpected"] = flags(rep.unexpected);
        d["stale"] = rep.stale.size();
        d["failures"] = rep.failures;
        d["inconclusive"] = rep.inconclusive;
        d["passed"] = rep.passed();
        return d;
    }

    py::tuple run_cli(const std::vector<std::string> &args)
    {
        std::ostringstream out, err;
        int code = bdf::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }
}

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Finite-order automorphisms of complex tori and split BdF classification";

    py::register_exception<bdf::InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<bdf::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<bdf::ConfigurationError>(m, "ConfigurationError", PyExc_RuntimeError);

    m.def("totient", &bdf::totient, py::arg("m"));
    m.def("admissible_orders", &bdf::admissible_orders, py::arg("n"));
    m.def("orbit_representatives", &orbit_representatives, py::arg("m"));
    m.def("fixed_locus", &fixed_locus, py::arg("components"));
    m.def("hodge_classes", &hodge_classes, py::arg("k"), py::arg("r"));
    m.def("order_count", [](long m, long r) { return to_py(bdf::order_count_oracle(m, r)); }, py::arg("m"),
          py::arg("r"));
    m.def("polarize", &polarize, py::arg("m"), py::arg("lambda_") = "1", py::arg("orbit") = std::vector<long>{},
          py::arg("bits") = 128, py::arg("max_bits") = 4096);
    m.def("search_lambda", &search_lambda, py::arg("m"), py::arg("orbit"), py::arg("bound") = 1);
    m.def("primary_families", &primary_families, py::arg("dim"), py::arg("m"));
    m.def("classify", &classify, py::arg("n"), py::arg("merged") = false);
    m.def("suite_names", &bdf::suite_names);
    m.def("verify", &verify, py::arg("suite"), py::arg("bits") = 128, py::arg("max_bits") = 4096);
    m.def("run_cli", &run_cli, py::arg("args"));

#ifdef BDFKIT_VERSION
    m.attr("__version__") = BDFKIT_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
