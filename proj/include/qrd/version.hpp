#ifndef QRD_VERSION_HPP
#define QRD_VERSION_HPP

namespace qrd {
inline constexpr const char* kVersion = "0.1.0";
}

#endif
