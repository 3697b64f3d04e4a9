#ifndef EVP_TYPES_HPP
#define EVP_TYPES_HPP

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

namespace evp {

inline constexpr int kMfccDim = 12;
inline constexpr int kNumLandmarks = 68;
inline constexpr double kVideoFps = 25.0;

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// 68 rows of (x, y), normalized coordinates in [0,1] for aligned face crops.
using Landmarks = Eigen::Matrix<double, kNumLandmarks, 2>;

// One frame per row, kMfccDim columns. hop_seconds is the frame period.
struct MfccSequence {
  Mat frames;
  double hop_seconds = 0.010;

  int length() const { return static_cast<int>(frames.rows()); }
};

// 28x12 block of MFCC frames centered on one video frame.
struct MfccWindow {
  Eigen::Matrix<double, 28, kMfccDim> block;
  int video_frame_index = 0;
};

struct Utterance {
  int content_id = 0;
  int emotion_id = 0;
  int speaker_id = 0;
  double rate = 1.0;
  MfccSequence mfcc;                 // one row per video frame
  std::vector<Landmarks> landmarks;  // same length as mfcc
};

struct Corpus {
  std::vector<Utterance> utterances;
  int num_contents = 0;
  int num_emotions = 0;
  int num_speakers = 0;
  uint64_t seed = 0;
};

}  // namespace evp

#endif  // EVP_TYPES_HPP
