#include "lienil/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include "lienil/error.hpp"

namespace lienil {

ScanResult scan_catalog(const std::vector<GroupSpec> &catalog, const ScanOptions &options) {
  struct Task {
    std::shared_ptr<const Group> group;
    const GroupSpec *spec;
    unsigned p;
  };

  ScanResult result;
  std::vector<Task> tasks;
  for (const auto &spec : catalog) {
    if (options.group && spec.name != *options.group)
      continue;
    std::shared_ptr<const Group> G;
    try {
      G = std::make_shared<const Group>(build_group(spec.generators, options.max_order));
    } catch (const Error &e) {
      if (e.code() != Errc::OrderExceeded)
        throw;
      result.skipped.push_back(spec.name);
      continue;
    }
    if (options.prime)
      tasks.push_back({G, &spec, *options.prime});
    else
      for (unsigned p : spec.primes)
        tasks.push_back({G, &spec, p});
  }

  result.reports.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        result.reports[i] = cross_check(tasks[i].group, tasks[i].spec->name, tasks[i].p);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  const unsigned width = std::max(1u, std::min<unsigned>(options.jobs, unsigned(tasks.size())));
  if (width == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < width; ++k)
      pool.emplace_back(worker);
  }
  if (failure)
    std::rethrow_exception(failure);

  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [](const CheckReport &x, const CheckReport &y) {
                     return std::tie(x.group_name, x.p) < std::tie(y.group_name, y.p);
                   });
  return result;
}

} // namespace lienil
