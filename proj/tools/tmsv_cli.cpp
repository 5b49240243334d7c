#include <iostream>
#include <string>
#include <vector>

#include "scenario.hpp"
#include "tmsv/error.hpp"

int main(int argc, char** argv) {
  using namespace tmsv::cli;
  const std::vector<std::string> args(argv + 1, argv + argc);

  ScenarioConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    std::cout << help.what();
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "tmsv_cli: " << e.what() << "\nRun with --help for usage.\n";
    return 1;
  }

  try {
    const ScenarioOutputs out = run_scenario(config);
    for (const auto& file : out.files) {
      std::cout << file.string() << '\n';
    }
    if (out.oracle) {
      std::cerr << "oracle: max |N_numeric - N_partial| = " << out.oracle->max_negativity_deviation
                << ", max block deviation = " << out.oracle->max_block_deviation << '\n';
    }
  } catch (const tmsv::TruncationError& e) {
    std::cerr << "tmsv_cli: numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const tmsv::NonPhysicalState& e) {
    std::cerr << "tmsv_cli: numerical failure: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tmsv_cli: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
