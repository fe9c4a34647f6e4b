#include "graspsyn/errors.hpp"

#include <sstream>

namespace graspsyn {

namespace {

std::string join(const std::vector<std::string>& problems) {
    std::ostringstream out;
    out << "dataset load failed with " << problems.size() << " problem(s):";
    for (const auto& p : problems) out << "\n  - " << p;
    return out.str();
}

}  // namespace

RomExceededError::RomExceededError(int finger_, std::string joint_,
                                   double angle_deg_, double limit_deg_)
    : GraspError("finger " + std::to_string(finger_) + " " + joint_ + " angle " +
                 std::to_string(angle_deg_) + " deg exceeds limit " +
                 std::to_string(limit_deg_) + " deg"),
      finger(finger_),
      joint(std::move(joint_)),
      angle_deg(angle_deg_),
      limit_deg(limit_deg_) {}

GapClosureError::GapClosureError(double force_n_, double limit_n_)
    : GraspError("force " + std::to_string(force_n_) +
                 " N would close the sensor gap (limit " +
                 std::to_string(limit_n_) + " N)"),
      force_n(force_n_),
      limit_n(limit_n_) {}

OutOfRangeError::OutOfRangeError(double value_, double lo_, double hi_)
    : GraspError("value " + std::to_string(value_) +
                 " outside calibrated range [" + std::to_string(lo_) + ", " +
                 std::to_string(hi_) + "] plus extrapolation band"),
      value(value_),
      lo(lo_),
      hi(hi_) {}

NoContactError::NoContactError(double max_force_n_)
    : GraspError("no force channel crossed the contact threshold (max " +
                 std::to_string(max_force_n_) + " N)"),
      max_force_n(max_force_n_) {}

UnstableHoldError::UnstableHoldError(std::size_t best_candidate_,
                                     double best_std_)
    : GraspError("force channels never stabilised; best candidate sample " +
                 std::to_string(best_candidate_) + " (worst channel std " +
                 std::to_string(best_std_) + " N)"),
      best_candidate(best_candidate_),
      best_std(best_std_) {}

ParseError::ParseError(std::string file_, std::size_t row_,
                       const std::string& what)
    : GraspError(file_ + ":" + std::to_string(row_) + ": " + what),
      file(std::move(file_)),
      row(row_) {}

DatasetError::DatasetError(std::vector<std::string> problems_)
    : GraspError(join(problems_)), problems(std::move(problems_)) {}

}  // namespace graspsyn
