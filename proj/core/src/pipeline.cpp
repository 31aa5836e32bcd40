#include "urisense/pipeline.hpp"

namespace urisense {

AnalysisResult analyze(const RgbImage& image, KernelSize kernel, const Classifier& classifier) {
  AnalysisResult result;
  result.kernel = kernel;
  result.hue = extract_hue(denoise(image, kernel));
  result.report = classifier.classify(result.hue.actual_hue);
  return result;
}

}  // namespace urisense
