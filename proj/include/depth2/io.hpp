#ifndef DEPTH2_IO_HPP
#define DEPTH2_IO_HPP

#include <string>

#include <json.hpp>

#include "depth2/frame.hpp"
#include "depth2/modal_algebra.hpp"
#include "depth2/semantics.hpp"
#include "depth2/verify.hpp"

namespace depth2 {

/// {"atoms": n, "f_on_atoms": [m0, ..., m(n-1)]}; bit j of a mask is atom j.
nlohmann::json algebra_to_json(const ModalAlgebra& a);
/// Throws DomainError on malformed input.
ModalAlgebra algebra_from_json(const nlohmann::json& j);

/// {"worlds": n, "edges": [[i, j], ...]}
nlohmann::json frame_to_json(const Frame& f);
Frame frame_from_json(const nlohmann::json& j);

/// Variable to world list.
nlohmann::json valuation_to_json(const Valuation& v);
/// Accepts world lists or bitmasks per variable.
Valuation valuation_from_json(const nlohmann::json& j, int n_worlds);

nlohmann::json report_to_json(const VerificationReport& r);

nlohmann::json read_json_file(const std::string& path);

}  // namespace depth2

#endif  // DEPTH2_IO_HPP
