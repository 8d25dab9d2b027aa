#include "steiner/report.hpp"

namespace steiner {

// Explicit instantiations for both arithmetic modes.
template std::string breakdown_csv<Rat>(const PerimeterBreakdown<Rat>&);
template std::string breakdown_csv<double>(const PerimeterBreakdown<double>&);
template std::string scene_svg<Rat>(const Scene<Rat>&);
template std::string scene_svg<double>(const Scene<double>&);

}  // namespace steiner
