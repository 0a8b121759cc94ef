#ifndef QRD_THREADS_HPP
#define QRD_THREADS_HPP

namespace qrd {

/// Worker count the parallel kernels will use (1 without OpenMP).
int max_threads();
/// Caps the kernels at n workers; no-op without OpenMP. Results never
/// depend on this setting.
void set_threads(int n);

}  // namespace qrd

#endif
