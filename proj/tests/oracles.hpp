#pragma once

// Reference values computed independently with mpmath (polylog, zeta, and
// adaptive Gauss-Legendre quadrature at 60 digits), truncated to 45 digits.
namespace oracle {

inline constexpr const char* kLiHalf4 = "0.51747906167389938633075816189886294562237747514138";
inline constexpr const char* kLiHalf5 = "0.50840057924226870745910884925858994131954112566482";
inline constexpr const char* kLiHalf6 = "0.50409539780398855069004650978887909520652228932667";
inline constexpr const char* kLiHalf7 = "0.50201456332470849456748929564070703628018815248979";
inline constexpr const char* kLiHalf8 = "0.50099665909705191055735590553027245872595583588861";
inline constexpr const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
inline constexpr const char* kZeta5 = "1.0369277551433699263313654864570341680570809195019";
inline constexpr const char* kZeta7 = "1.0083492773819228268397975498497967595998635605652";

inline constexpr const char* kI0412 = "0.633579571034806726392434568070764635228783099";
inline constexpr const char* kI2231 = "0.0195146628496327920090999866851623984299979986";
inline constexpr const char* kI1111 = "0.290721277889493712945843988099230915985288536";
inline constexpr const char* kI1031 = "-0.234636737362204629484812481667500252520793006";
inline constexpr const char* kI3022 = "-1.35108114330257484430389499714393928607480003";
inline constexpr const char* kI1221 = "-0.0694502767905640063120456872774691666313809401";
inline constexpr const char* kI0341 = "-0.0121153589989119415537348222329269395709343205";
inline constexpr const char* kI0422 = "0.0667920732970353810610083397342562864558000798";

}  // namespace oracle
