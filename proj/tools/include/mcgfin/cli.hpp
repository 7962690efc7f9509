#ifndef MCGFIN_CLI_HPP_
#define MCGFIN_CLI_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mcgfin::cli {

  enum class Command { Orbit, Conjugate, FiniteImage, Jordan, VerifyPaper, Fmt };

  // Exit status contract.
  inline constexpr int kExitOk       = 0;  // verdict produced (any verdict)
  inline constexpr int kExitInput    = 1;  // unreadable or invalid input
  inline constexpr int kExitInternal = 2;  // broken internal invariant

  struct RunConfig {
    Command command = Command::VerifyPaper;

    std::vector<std::filesystem::path> inputs;  // conjugate: A B; fmt: FILE
    std::optional<std::filesystem::path> rep;
    std::vector<std::filesystem::path>   automorphisms;
    std::string moves = "nielsen";  // "nielsen", "none" or e.g. "c,d"

    std::size_t           max_classes = 10000;
    std::size_t           max_depth   = 64;
    std::optional<double> max_seconds;
    std::size_t           workers            = 1;
    std::size_t           fingerprint_length = 3;
    std::size_t           pencil_cap         = 8;
    bool                  full_mcg           = false;

    std::size_t cap            = 200000;
    std::size_t witness_length = 4;

    std::size_t jordan_rank  = 2;
    long long   jordan_n_max = 100;

    std::vector<std::string>              only;
    std::optional<std::filesystem::path>  data_dir;

    std::optional<std::filesystem::path> out;
    std::optional<std::filesystem::path> cert;
    bool                                 check_only    = false;  // fmt --check
    bool                                 no_timestamp  = false;
    bool                                 unsafe_accept = false;
  };

  // Default worker count: $MCGFIN_WORKERS if set and positive, else 1.
  std::size_t default_workers();

  std::filesystem::path default_data_dir();

  int run(RunConfig const& config, std::ostream& out, std::ostream& err);

  struct ScenarioOutcome {
    std::string name;
    std::string source;
    bool        passed = false;
    double      millis = 0;
    std::string detail;
  };

  // Runs the bundled scenario manifest; throws mcgfin::Error on unreadable
  // scenario files.
  std::vector<ScenarioOutcome> verify_paper(std::filesystem::path const&    data_dir,
                                            std::vector<std::string> const& only);

}  // namespace mcgfin::cli

#endif  // MCGFIN_CLI_HPP_
