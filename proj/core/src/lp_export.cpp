#include <sstream>

#include "bst/exact.hpp"
#include "number_format.hpp"

namespace bst {

namespace {

std::string pi_name(int l, int u, int v) {
    return "pi_" + std::to_string(l) + "_" + std::to_string(u) + "_" + std::to_string(v);
}

std::string eps_name(int u, int v) {
    if (u > v) {
        std::swap(u, v);
    }
    return "eps_" + std::to_string(u) + "_" + std::to_string(v);
}

std::string beta_name(int v) { return "beta_" + std::to_string(v); }

void append_terms(std::ostringstream& out,
                  const std::vector<std::pair<std::string, double>>& terms,
                  int wrap_at) {
    int on_line = 0;
    for (size_t i = 0; i < terms.size(); ++i) {
        const auto& [var, coef] = terms[i];
        double mag = coef < 0 ? -coef : coef;
        if (i == 0) {
            if (coef < 0) {
                out << "- ";
            }
        } else {
            out << (coef < 0 ? " - " : " + ");
        }
        if (mag != 1.0) {
            out << detail::format_number(mag) << ' ';
        }
        out << var;
        if (++on_line == wrap_at && i + 1 < terms.size()) {
            out << "\n   ";
            on_line = 0;
        }
    }
}

} // namespace

LpModel build_lp_model(const Instance& inst) {
    inst.validate();
    if (inst.k() < 2) {
        throw InputError("integer program needs at least two terminals");
    }
    const Graph& g = inst.graph;
    LpModel model;
    model.root = pick_root(inst);
    int r = model.root;

    std::vector<int> destinations;
    for (int t : inst.terminals) {
        if (t != r) {
            destinations.push_back(t);
        }
    }

    // Objective: sum of edge uses plus w per branch indicator.
    for (const auto& [u, v] : g.edges()) {
        model.objective.emplace_back(eps_name(u, v), 1.0);
    }
    for (int v = 0; v < g.node_count(); ++v) {
        model.objective.emplace_back(beta_name(v), inst.branch_weight);
    }

    // (1) net outgoing flow at the root is one, per destination.
    for (int l : destinations) {
        LpRow row;
        row.name = "flow_root_" + std::to_string(l);
        for (int v : g.neighbors(r)) {
            row.terms.emplace_back(pi_name(l, r, v), 1.0);
        }
        for (int v : g.neighbors(r)) {
            row.terms.emplace_back(pi_name(l, v, r), -1.0);
        }
        row.sense = '=';
        row.rhs = 1.0;
        model.rows.push_back(std::move(row));
    }

    // (2) net incoming flow at each destination is one.
    for (int l : destinations) {
        LpRow row;
        row.name = "flow_dest_" + std::to_string(l);
        for (int u : g.neighbors(l)) {
            row.terms.emplace_back(pi_name(l, u, l), 1.0);
        }
        for (int u : g.neighbors(l)) {
            row.terms.emplace_back(pi_name(l, l, u), -1.0);
        }
        row.sense = '=';
        row.rhs = 1.0;
        model.rows.push_back(std::move(row));
    }

    // (3) flow balance at every other node.
    for (int l : destinations) {
        for (int u = 0; u < g.node_count(); ++u) {
            if (u == l || u == r) {
                continue;
            }
            LpRow row;
            row.name = "flow_mid_" + std::to_string(l) + "_" + std::to_string(u);
            for (int v : g.neighbors(u)) {
                row.terms.emplace_back(pi_name(l, v, u), 1.0);
            }
            for (int v : g.neighbors(u)) {
                row.terms.emplace_back(pi_name(l, u, v), -1.0);
            }
            if (row.terms.empty()) {
                row.terms.emplace_back(beta_name(u), 0.0); // isolated node, vacuous row
            }
            row.sense = '=';
            row.rhs = 0.0;
            model.rows.push_back(std::move(row));
        }
    }

    // (4) an edge carrying flow in either direction must be bought.
    for (int l : destinations) {
        for (const auto& [u, v] : g.edges()) {
            LpRow fwd;
            fwd.name = "edge_use_" + std::to_string(l) + "_" + std::to_string(u) + "_" +
                       std::to_string(v);
            fwd.terms.emplace_back(pi_name(l, u, v), 1.0);
            fwd.terms.emplace_back(eps_name(u, v), -1.0);
            fwd.sense = '<';
            fwd.rhs = 0.0;
            model.rows.push_back(std::move(fwd));

            LpRow bwd;
            bwd.name = "edge_use_" + std::to_string(l) + "_" + std::to_string(v) + "_" +
                       std::to_string(u);
            bwd.terms.emplace_back(pi_name(l, v, u), 1.0);
            bwd.terms.emplace_back(eps_name(u, v), -1.0);
            bwd.sense = '<';
            bwd.rhs = 0.0;
            model.rows.push_back(std::move(bwd));
        }
    }

    // (5) (1/|N_u|)(-2 + sum of incident eps) <= beta_u, kept in scaled form.
    for (int u = 0; u < g.node_count(); ++u) {
        LpRow row;
        row.name = "branch_" + std::to_string(u);
        int deg = g.degree(u);
        if (deg == 0) {
            row.terms.emplace_back(beta_name(u), -1.0);
            row.sense = '<';
            row.rhs = 0.0;
        } else {
            double inv = 1.0 / deg;
            for (int v : g.neighbors(u)) {
                row.terms.emplace_back(eps_name(u, v), inv);
            }
            row.terms.emplace_back(beta_name(u), -1.0);
            row.sense = '<';
            row.rhs = 2.0 * inv;
        }
        model.rows.push_back(std::move(row));
    }

    // Binary declarations: pi by destination then edge, eps, beta.
    for (int l : destinations) {
        for (const auto& [u, v] : g.edges()) {
            model.binaries.push_back(pi_name(l, u, v));
            model.binaries.push_back(pi_name(l, v, u));
        }
    }
    for (const auto& [u, v] : g.edges()) {
        model.binaries.push_back(eps_name(u, v));
    }
    for (int v = 0; v < g.node_count(); ++v) {
        model.binaries.push_back(beta_name(v));
    }
    return model;
}

std::string LpModel::to_text() const {
    std::ostringstream out;
    out << "Minimize\n obj: ";
    append_terms(out, objective, 8);
    out << "\nSubject To\n";
    for (const auto& row : rows) {
        out << ' ' << row.name << ": ";
        append_terms(out, row.terms, 8);
        out << (row.sense == '=' ? " = " : " <= ") << detail::format_number(row.rhs)
            << '\n';
    }
    out << "Binary\n";
    for (const auto& var : binaries) {
        out << ' ' << var << '\n';
    }
    out << "End\n";
    return out.str();
}

std::string export_lp(const Instance& inst) { return build_lp_model(inst).to_text(); }

} // namespace bst
