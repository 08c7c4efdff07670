#include <iostream>
#include <variant>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  auto parsed = tigen::cli::parse_args(argc, argv, std::cout, std::cerr);
  if (const int* status = std::get_if<int>(&parsed)) return *status;
  try {
    return tigen::cli::run(std::get<tigen::cli::RunConfig>(parsed), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tigen::cli::kExitUsage;
  }
}
