#ifndef RUMOR_VERSION_HPP
#define RUMOR_VERSION_HPP

namespace rumor {

inline constexpr const char* kToolName = "rumorsim";
inline constexpr const char* kVersion = "0.1.0";

} // namespace rumor

#endif
