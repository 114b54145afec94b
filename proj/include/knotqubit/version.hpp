#ifndef KNOTQUBIT_VERSION_HPP
#define KNOTQUBIT_VERSION_HPP

namespace knotqubit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace knotqubit

#endif  // KNOTQUBIT_VERSION_HPP
