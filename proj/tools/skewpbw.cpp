#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewpbw/algfile.hpp"
#include "skewpbw/verify.hpp"

namespace {

using namespace skewpbw;

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Params parse_params(const std::vector<std::string> &kvs) {
    Params ps;
    for (const auto &kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw BadParameter("--param expects key=value, got: " + kv);
        ps[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return ps;
}

std::optional<Field> parse_field_flag(const std::string &s) {
    if (s.empty())
        return std::nullopt;
    if (s == "Q")
        return Field::Q();
    if (s == "Q(p)")
        return Field::Qp();
    if (s.rfind("Cyclo(", 0) == 0 && s.back() == ')')
        return Field::Cyclo(static_cast<unsigned>(std::stoul(s.substr(6, s.size() - 7))));
    throw BadParameter("unknown field spec: " + s + " (use Q, Q(p) or Cyclo(n))");
}

void emit(const Report &rep, bool json, const std::string &body = "") {
    if (json)
        std::cout << rep.json() << "\n";
    else {
        if (!body.empty())
            std::cout << body;
        std::cout << rep.text();
    }
}

int run(int argc, char **argv) {
    CLI::App app{"Exact symbolic engine for skew PBW extensions"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit structured report");

    std::string file, expr, expr2, algebra, field_spec;
    std::vector<std::string> param_kvs;
    unsigned max_degree = 0;
    bool has_max_degree = false, all = false;
    unsigned oracle_max = 4;

    auto *cmd_norm = app.add_subcommand("normalize", "print the PBW normal form of an expression");
    cmd_norm->add_option("file", file)->required();
    cmd_norm->add_option("expr", expr)->required();

    auto *cmd_comm = app.add_subcommand("commutator", "print [expr1, expr2] in normal form");
    cmd_comm->add_option("file", file)->required();
    cmd_comm->add_option("expr1", expr)->required();
    cmd_comm->add_option("expr2", expr2)->required();

    auto *cmd_cent = app.add_subcommand("central", "check whether an expression is central");
    cmd_cent->add_option("file", file)->required();
    cmd_cent->add_option("expr", expr)->required();

    auto *cmd_center = app.add_subcommand("center", "degree-bounded center basis");
    cmd_center->add_option("file", file);
    cmd_center->add_option("--algebra", algebra);
    cmd_center->add_option("--param", param_kvs);
    cmd_center->add_option("--field", field_spec);
    cmd_center->add_option("--max-degree", max_degree)->required();

    auto *cmd_graded = app.add_subcommand("graded", "print the associated graded presentation");
    cmd_graded->add_option("file", file)->required();

    auto *cmd_verify = app.add_subcommand("verify", "run catalog facts, lemma oracles and cancellation report");
    cmd_verify->add_option("--algebra", algebra);
    cmd_verify->add_flag("--all", all);
    auto *vmd = cmd_verify->add_option("--max-degree", max_degree);
    cmd_verify->add_option("--oracle-max", oracle_max);

    auto *cmd_list = app.add_subcommand("list", "list catalog algebras");

    app.parse(argc, argv);
    has_max_degree = vmd->count() > 0;

    Report rep;
    rep.field = "";

    if (cmd_norm->parsed()) {
        AlgebraPresentation p = parse_algebra_file(slurp(file));
        p.require_valid();
        rep.command = "normalize";
        rep.field = p.field.str();
        Element e = parse_element(p, expr);
        rep.add("normalize", true, "", e.str(p));
        emit(rep, json, e.str(p) + "\n");
        return 0;
    }
    if (cmd_comm->parsed()) {
        AlgebraPresentation p = parse_algebra_file(slurp(file));
        p.require_valid();
        rep.command = "commutator";
        rep.field = p.field.str();
        Element c = commutator(p, parse_element(p, expr), parse_element(p, expr2));
        rep.add("commutator", true, "", c.str(p));
        emit(rep, json, c.str(p) + "\n");
        return 0;
    }
    if (cmd_cent->parsed()) {
        AlgebraPresentation p = parse_algebra_file(slurp(file));
        p.require_valid();
        rep.command = "central";
        rep.field = p.field.str();
        auto w = central_witness(p, parse_element(p, expr));
        rep.add("central/" + expr, !w.has_value(), "commutes with all generators",
                w ? "[" + p.generators[w->generator_index].name + ", f] = " + w->commutator.str(p)
                  : "");
        emit(rep, json, w ? "false\n" : "true\n");
        return w ? 1 : 0;
    }
    if (cmd_center->parsed()) {
        AlgebraPresentation p = algebra.empty()
                                    ? parse_algebra_file(slurp(file))
                                    : Catalog::instance().build(algebra, parse_params(param_kvs),
                                                                parse_field_flag(field_spec));
        p.require_valid();
        rep.command = "center";
        rep.algebra = algebra;
        rep.field = p.field.str();
        CenterBasis cb = center_basis(p, max_degree);
        std::string body;
        for (const auto &e : cb.basis)
            body += e.str(p) + "\n";
        rep.add("center/D=" + std::to_string(max_degree), true, "",
                std::to_string(cb.basis.size()) + " basis elements");
        for (const auto &e : cb.basis)
            rep.notes.push_back(e.str(p));
        emit(rep, json, body);
        return 0;
    }
    if (cmd_graded->parsed()) {
        AlgebraPresentation p = parse_algebra_file(slurp(file));
        p.require_valid();
        rep.command = "graded";
        rep.field = p.field.str();
        AlgebraPresentation g = associated_graded(p);
        g.require_valid();
        rep.add("graded/quasi-commutative", is_quasi_commutative(g), "quasi-commutative", "");
        emit(rep, json, unparse(g));
        return rep.ok() ? 0 : 1;
    }
    if (cmd_verify->parsed()) {
        VerifyOptions opts;
        if (has_max_degree)
            opts.max_degree = max_degree;
        opts.oracle_max = oracle_max;
        if (all) {
            rep = verify_all(opts);
        } else {
            if (algebra.empty())
                throw BadParameter("verify needs --algebra <id> or --all");
            rep.command = "verify";
            rep.algebra = algebra;
            rep.field = Catalog::instance().default_field(algebra).str();
            verify_algebra_into(rep, algebra, opts);
        }
        emit(rep, json);
        return rep.ok() ? 0 : 1;
    }
    if (cmd_list->parsed()) {
        rep.command = "list";
        std::string body;
        for (const auto &l : Catalog::instance().list()) {
            body += l.id + "  " + l.signature + "  -- " + l.provenance + "\n";
            rep.add(l.id, true, "", l.signature);
        }
        emit(rep, json, body);
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const skewpbw::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const skewpbw::InadmissiblePresentation &e) {
        std::cerr << "inadmissible presentation: " << e.what() << "\n";
        return 3;
    } catch (const skewpbw::ResourceLimit &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const skewpbw::BudgetExceeded &e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 4;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
