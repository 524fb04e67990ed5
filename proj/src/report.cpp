#include <curvosc/report.hpp>

#include <cstdio>
#include <ostream>

namespace curvosc::report {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {
json coords_json(const char* chart, const char* form, double kappa,
                 std::initializer_list<double> coords) {
    json j;
    j["chart"] = chart;
    j["form"] = form;
    j["kappa"] = fmt17(kappa);
    json arr = json::array();
    for (double c : coords) arr.push_back(fmt17(c));
    j["coords"] = arr;
    return j;
}
}  // namespace

json state_json(const mech::CartVel& s, double kappa) {
    return coords_json("cartesian", "velocity", kappa, {s.x, s.y, s.vx, s.vy});
}
json state_json(const mech::CylVel& s, double kappa) {
    return coords_json("cylindrical", "velocity", kappa, {s.r, s.phi, s.vr, s.vphi});
}
json state_json(const mech::CartMom& s, double kappa) {
    return coords_json("cartesian", "momentum", kappa, {s.x, s.y, s.px, s.py});
}
json state_json(const mech::CylMom& s, double kappa) {
    return coords_json("cylindrical", "momentum", kappa, {s.r, s.phi, s.pr, s.pphi});
}

json sign_convention(const std::string& resolved) {
    json j;
    j["paper_branch"] = "E = (n+1)((n+2) kappa/2 - 1), printed closed form";
    j["euclid_branch"] =
        "E = (n+1)(1 + n kappa/2), Kummer-consistent boundary factorization";
    j["resolved"] = resolved;
    return j;
}

void write_trajectory_csv(std::ostream& os, const dyn::Trajectory& traj) {
    const mech::PhysConstants c{1.0, traj.alpha, 1.0};
    os << "t,x,y,vx,vy,H,P1,P2,J\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const auto& s = traj.states[i];
        const mech::CartMom p = mech::momenta(s, traj.kappa, c);
        const mech::NoetherMomenta nm = mech::noether(p, traj.kappa);
        os << fmt17(traj.t[i]) << ',' << fmt17(s.x) << ',' << fmt17(s.y) << ','
           << fmt17(s.vx) << ',' << fmt17(s.vy) << ','
           << fmt17(mech::hamiltonian(p, traj.kappa, c)) << ',' << fmt17(nm.p1)
           << ',' << fmt17(nm.p2) << ',' << fmt17(nm.j) << '\n';
    }
}

namespace {
json drift_json(const dyn::QuantityDrift& d) {
    json j;
    j["initial"] = fmt17(d.initial);
    j["max_abs_drift"] = fmt17(d.max_abs);
    j["max_rel_drift"] = fmt17(d.max_rel);
    return j;
}
}  // namespace

json conservation_json(const dyn::Trajectory& traj,
                       const dyn::ConservationReport& rep) {
    json j;
    j["kappa"] = fmt17(traj.kappa);
    j["alpha"] = fmt17(traj.alpha);
    j["tolerance"] = fmt17(traj.stats.tol);
    j["t_reached"] = fmt17(traj.t_reached);
    j["domain_exit"] = traj.domain_exit;
    j["steps_accepted"] = traj.stats.accepted;
    j["steps_rejected"] = traj.stats.rejected;
    j["H"] = drift_json(rep.h);
    j["P1"] = drift_json(rep.p1);
    j["P2"] = drift_json(rep.p2);
    j["J"] = drift_json(rep.j);
    return j;
}

json identity_json(const std::vector<sym::IdentityCheck>& suite,
                   const std::vector<sym::IdentityCheck>& discrepancies) {
    json j;
    json items = json::array();
    for (const auto& c : suite) {
        json it;
        it["name"] = c.name;
        it["status"] = c.zero ? "ZERO" : "NONZERO";
        it["residuals"] = c.residuals;
        items.push_back(it);
    }
    j["identities"] = items;
    j["all_zero"] = sym::all_zero(suite);
    json docs = json::array();
    for (const auto& c : discrepancies) {
        json it;
        it["name"] = c.name;
        it["status"] = c.zero ? "ZERO" : "NONZERO (documented discrepancy)";
        it["residuals"] = c.residuals;
        docs.push_back(it);
    }
    j["documented_discrepancies"] = docs;
    return j;
}

json spectrum_json(double kappa, int mu, qm::Branch branch,
                   const std::vector<qm::SpectralLine>& lines) {
    json j;
    j["kappa"] = fmt17(kappa);
    j["mu"] = mu;
    j["branch"] = qm::to_string(branch);
    json arr = json::array();
    for (const auto& l : lines) {
        json it;
        it["N_r"] = l.qn.n_r;
        it["n"] = l.qn.n();
        it["E_scaled"] = fmt17(l.e_scaled);
        it["E_physical"] = fmt17(l.e_physical);
        it["source"] = l.source;
        arr.push_back(it);
    }
    j["lines"] = arr;
    return j;
}

json oracle_json(const qm::OracleComparison& cmp) {
    json j;
    j["mu"] = cmp.mu;
    j["kappa"] = fmt17(cmp.kappa);
    j["converged"] = cmp.converged;
    j["resolved_branch"] = qm::to_string(cmp.resolved);
    j["max_delta_resolved"] = fmt17(cmp.max_delta_resolved);
    j["max_delta_other"] = fmt17(cmp.max_delta_other);
    json rows = json::array();
    for (const auto& r : cmp.rows) {
        json it;
        it["level"] = r.level;
        it["oracle"] = fmt17(r.oracle);
        it["paper"] = fmt17(r.paper);
        it["euclid"] = fmt17(r.euclid);
        it["delta_paper"] = fmt17(r.paper - r.oracle);
        it["delta_euclid"] = fmt17(r.euclid - r.oracle);
        rows.push_back(it);
    }
    j["levels"] = rows;
    j["sign_convention"] = sign_convention(qm::to_string(cmp.resolved));
    return j;
}

void write_wavefunction_csv(std::ostream& os, const qm::QuantumNumbers& qn,
                            double kappa, qm::Branch branch, double scale,
                            const std::vector<double>& radii,
                            const std::vector<double>& angles) {
    os << "r,phi,re,im\n";
    for (double r : radii)
        for (double phi : angles) {
            const auto v = qm::eval_wavefunction(qn, kappa, r, phi, branch, scale);
            os << fmt17(r) << ',' << fmt17(phi) << ',' << fmt17(v.real()) << ','
               << fmt17(v.imag()) << '\n';
        }
}

}  // namespace curvosc::report
