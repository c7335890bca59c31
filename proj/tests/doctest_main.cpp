#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "support/args.hpp"

int main(int argc, char** argv) {
  std::vector<char*> rest = testsupport::extract_args(argc, argv);
  doctest::Context context(static_cast<int>(rest.size()), rest.data());
  return context.run();
}
