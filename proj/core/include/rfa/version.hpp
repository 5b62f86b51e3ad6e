#ifndef RFA_VERSION_HPP
#define RFA_VERSION_HPP

namespace rfa {

inline constexpr const char* kVersion = "0.1.0";

} // namespace rfa

#endif
