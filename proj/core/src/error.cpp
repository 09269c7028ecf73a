#include "quandle/error.hpp"

namespace quandle {

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error("at position " + std::to_string(position) + ": " + message),
      position_(position),
      message_(message) {}

const char* axiom_name(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::GroupIdentity:
      return "identity";
    case Axiom::GroupInverse:
      return "inverse";
    case Axiom::GroupAssociativity:
      return "associativity";
    case Axiom::Idempotence:
      return "axiom 1 (idempotence)";
    case Axiom::RightInvertibility:
      return "axiom 2 (right translations bijective)";
    case Axiom::SelfDistributivity:
      return "axiom 3 (right self-distributivity)";
    case Axiom::Homomorphism:
      return "homomorphism law";
    case Axiom::Automorphism:
      return "automorphism";
    case Axiom::Subgroup:
      return "subgroup";
    case Axiom::Centralizer:
      return "centralizer";
  }
  return "unknown";
}

namespace {

std::string describe(Axiom axiom, const std::vector<std::size_t>& witness,
                     const std::string& detail) {
  std::string out = std::string(axiom_name(axiom)) + " violated";
  if (!witness.empty()) {
    out += " at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(witness[i]);
    }
    out += ")";
  }
  if (!detail.empty()) out += ": " + detail;
  return out;
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<std::size_t> witness,
                               const std::string& detail)
    : Error(describe(axiom, witness, detail)),
      axiom_(axiom),
      witness_(std::move(witness)) {}

}  // namespace quandle
