#pragma once

#include "urisense/colorspace.hpp"
#include "urisense/fuzzy.hpp"
#include "urisense/imaging.hpp"

namespace urisense {

struct AnalysisResult {
  KernelSize kernel;
  HueSummary hue;
  ClassificationReport report;
};

/// denoise -> extract_hue -> classify on the folded hue.
AnalysisResult analyze(const RgbImage& image, KernelSize kernel, const Classifier& classifier);

}  // namespace urisense
