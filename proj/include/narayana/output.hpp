#pragma once

#include <string>
#include <vector>

#include "narayana/powers.hpp"
#include "narayana/squares.hpp"

namespace narayana::output {

// All emitters produce LF line endings and a fixed header; byte-deterministic
// for fixed inputs.

std::string squares_csv(const std::vector<squares::SquareHit>& hits);
std::string squares_json(const std::vector<squares::SquareHit>& hits);

std::string figure1_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows);
std::string figure1_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows);
std::string figure1_svg(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows,
                        std::uint64_t a_max);

std::string figure2_csv(const std::vector<powers::Figure2Row>& rows);
std::string figure2_json(const std::vector<powers::Figure2Row>& rows);
std::string figure2_svg(const std::vector<powers::Figure2Row>& rows, std::uint64_t a_max);

std::string certificates_json(const std::vector<powers::PowerCertificate>& certs);
std::string certificates_csv(const std::vector<powers::PowerCertificate>& certs);

std::string scan_json(const powers::ScanReport& report);
std::string scan_csv(const powers::ScanReport& report);

std::string crosscheck_comment(const squares::CrosscheckReport& report);

}  // namespace narayana::output
