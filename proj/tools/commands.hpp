#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace origami::cli {

// Shared exit-code contract: 0 success / certified, 2 input or precondition
// error, 3 sufficient criterion not satisfied.
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitNotCertified = 3;

struct CacheOptions {
  bool no_cache = false;
  std::string dir;  // empty = default location
};

int cmd_make(const std::string& family, const std::vector<long long>& params,
             const std::optional<std::array<long long, 3>>& abc,
             std::ostream& out, std::ostream& err);

int cmd_cylinders(const std::string& file, long long m, bool as_json,
                  std::ostream& out, std::ostream& err);

int cmd_veech(const std::string& file, bool as_json, const CacheOptions& cache,
              std::ostream& out, std::ostream& err);

int cmd_certify(const std::string& file, const std::string& method,
                const std::optional<std::array<long long, 3>>& abc, bool as_json,
                std::ostream& out, std::ostream& err);

int cmd_surjectivity(const std::string& file, unsigned long long max_n, bool as_json,
                     const CacheOptions& cache, std::ostream& out, std::ostream& err);

}  // namespace origami::cli
