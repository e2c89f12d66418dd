#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "spinorlab/exec.hpp"

int main(int argc, char** argv) {
  spinorlab::apply_thread_cap_from_env();
  return doctest::Context(argc, argv).run();
}
