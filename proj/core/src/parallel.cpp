#include "qdm/parallel.hpp"

namespace qdm {
namespace {

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> setting{std::max(1u, std::thread::hardware_concurrency())};
  return setting;
}

}  // namespace

unsigned default_threads() { return thread_setting().load(); }

void set_default_threads(unsigned threads) {
  thread_setting().store(threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads);
}

}  // namespace qdm
