#ifndef HQL_PARALLEL_HPP
#define HQL_PARALLEL_HPP

#include <functional>

namespace hql {

/// Worker count: HQL_THREADS when set (clamped to [1, hw]), otherwise the
/// hardware concurrency.
int worker_count();

/// Runs body(i) for i in [0, n) across worker threads.  Each index writes to
/// its own output slot, so results are independent of scheduling; reductions
/// happen afterwards in index order.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace hql

#endif
