#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspedge/tangent_space.hpp"

namespace cuspedge {

/// Homogeneous representatives spanning the complement of the group tangent
/// space inside one graded jet piece. Empty generators drive determinacy.
struct TransversalResult {
    int degree = 0;
    std::vector<JetMap> generators;

    bool empty() const { return generators.empty(); }
};

enum class CertStatus { Holds, Fails, Inconclusive };

struct DeterminacyCertificate {
    int degree = 0;
    CertStatus status = CertStatus::Fails;
    std::optional<int> auxiliary_degree; // l of the XK inclusion (map case)
    std::vector<std::string> residual;   // uncovered monomial sections

    bool holds() const { return status == CertStatus::Holds; }
};

struct CodimensionResult {
    enum class Kind { Finite, InfiniteOrInconclusive } kind = Kind::InfiniteOrInconclusive;
    int value = -1;
    int determinacy_degree = -1;
    std::optional<int> auxiliary_degree;
};

/// Deformation of a base germ along named directions dF/da_i.
struct Deformation {
    JetMap base;
    std::vector<std::string> parameters;
    std::vector<JetMap> directions;
};

struct VersalityResult {
    bool versal = false;
    std::vector<std::string> missing; // directions not covered
};

enum class ProbeOutcome { Removable, Modulus };

struct ModulusProbeResult {
    ProbeOutcome outcome = ProbeOutcome::Modulus;
    std::vector<Rational> samples_used;
    std::vector<int> tangent_dims; // per sample, for the constancy condition
    bool membership_everywhere = false;
    bool dimension_constant = false;
};

/// Default parameter samples for the Mather-type probes.
std::vector<Rational> default_probe_samples();

/// Minimal homogeneous complement of the group tangent space in the graded
/// piece of the given degree. group must be R1X (functions) or XA1 (maps);
/// g must be truncated at degree+1 or beyond.
TransversalResult complete_transversal(const JetMap& g, int degree, GroupTag group);

/// Smallest l <= lmax with M^l.E(3,p) inside the contact-group tangent
/// space, certified at jet level (the space is an E3-module, so the
/// truncated inclusion lifts).
std::optional<int> contact_order_bound(const JetMap& g, int lmax = 6);

/// Finite-determinacy certificate at degree k: for functions the inclusion
/// M^(k+1) in L R1(X).g + M^(k+2); for maps both inclusions with the
/// auxiliary degree searched upward. Inconclusive when the auxiliary search
/// hits its cap, which is distinct from a failing inclusion.
DeterminacyCertificate is_determined(const JetMap& g, int k, GroupTag group);

/// Smallest k <= kmax whose certificate holds.
std::optional<int> determinacy_degree(const JetMap& g, GroupTag group, int kmax = 9);

/// R(X)-codimension dim(M3 / Theta(X).g) for functions, extended
/// _XA_e-codimension dim(E(3,2) / L_XA_e.g) for maps, evaluated at
/// truncation degree = determinacy degree + 1 (where it has stabilized).
CodimensionResult codimension(const JetMap& g);

/// Versality of a deformation: the extended tangent space plus the constant
/// directions plus the dF/da_i spans the full truncated space.
VersalityResult versality_check(const Deformation& F);

/// One-parameter family triviality probe: dF/dt lies in the module generated
/// by the tangent fields vanishing at 0 applied to F, modulo M^(k+1), at
/// every sampled parameter value.
bool triviality_probe(const Deformation& F, int k, const std::vector<Rational>& samples = {});

/// Mather-probe for a complete-transversal direction: removable iff the
/// direction lies in the full group tangent space of g + lambda*direction at
/// every sample and the tangent-space dimension does not depend on lambda.
ModulusProbeResult modulus_probe(const JetMap& g, const JetMap& direction, GroupTag group,
                                 std::vector<Rational> samples = {},
                                 const std::vector<Rational>& excluded = {});

} // namespace cuspedge
