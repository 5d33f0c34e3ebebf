#include "catmates/report.hpp"

#include "catmates/error.hpp"

namespace catmates {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::AssocViolation: return "AssocViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::NoColimit: return "NoColimit";
    case ErrorCode::InvalidAdjunction: return "InvalidAdjunction";
    case ErrorCode::TriangleFailure: return "TriangleFailure";
    case ErrorCode::NotAdjoint: return "NotAdjoint";
    case ErrorCode::NaturalityFailure: return "NaturalityFailure";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidAnchor: return "InvalidAnchor";
    case ErrorCode::UniverseNotClosed: return "UniverseNotClosed";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void Report::fail(std::string law, std::string witness) {
  ++checked_;
  ++failures_;
  if (stored_.size() < kMaxStored || !has_law(law))
    stored_.push_back({std::move(law), std::move(witness)});
}

bool Report::expect(bool cond, std::string_view law, const std::string& witness) {
  if (cond) {
    ++checked_;
    return true;
  }
  fail(std::string(law), witness);
  return false;
}

void Report::merge(const Report& other, std::string_view prefix) {
  checked_ += other.checked_;
  failures_ += other.failures_;
  for (const auto& v : other.stored_) {
    std::string law = prefix.empty() ? v.law : std::string(prefix) + "/" + v.law;
    if (stored_.size() < kMaxStored || !has_law(law)) stored_.push_back({std::move(law), v.witness});
  }
}

bool Report::has_law(std::string_view law) const {
  for (const auto& v : stored_)
    if (v.law == law) return true;
  return false;
}

std::string Report::summary() const {
  std::string s = std::to_string(checked_) + " checked, " +
                  std::to_string(failures_) + " violations";
  if (!stored_.empty()) s += "; first: " + stored_.front().law + " at " + stored_.front().witness;
  return s;
}

}  // namespace catmates
