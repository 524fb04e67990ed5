#pragma once

#include <curvosc/dynamics.hpp>
#include <curvosc/identities.hpp>
#include <curvosc/spectrum.hpp>
#include <curvosc/sturm_liouville.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace curvosc::report {

// All floating-point output is serialized with 17 significant digits so
// re-runs are bit-identical.
std::string fmt17(double v);

nlohmann::json state_json(const mech::CartVel& s, double kappa);
nlohmann::json state_json(const mech::CylVel& s, double kappa);
nlohmann::json state_json(const mech::CartMom& s, double kappa);
nlohmann::json state_json(const mech::CylMom& s, double kappa);

// Sign-convention block embedded into every quantum report so a consumer
// can never confuse the printed closed form with the oracle-resolved one.
nlohmann::json sign_convention(const std::string& resolved);

// CSV trajectory export: header t,x,y,vx,vy,H,P1,P2,J.
void write_trajectory_csv(std::ostream& os, const dyn::Trajectory& traj);

nlohmann::json conservation_json(const dyn::Trajectory& traj,
                                 const dyn::ConservationReport& rep);

nlohmann::json identity_json(const std::vector<sym::IdentityCheck>& suite,
                             const std::vector<sym::IdentityCheck>& discrepancies);

// Spectrum report {kappa, mu, branch, lines:[...]} for one family.
nlohmann::json spectrum_json(double kappa, int mu, qm::Branch branch,
                             const std::vector<qm::SpectralLine>& lines);

nlohmann::json oracle_json(const qm::OracleComparison& cmp);

// CSV wavefunction samples: header r,phi,re,im.
void write_wavefunction_csv(std::ostream& os, const qm::QuantumNumbers& qn,
                            double kappa, qm::Branch branch, double scale,
                            const std::vector<double>& radii,
                            const std::vector<double>& angles);

}  // namespace curvosc::report
