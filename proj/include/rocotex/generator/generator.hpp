#pragma once

#include <cstdint>
#include <string>

#include "rocotex/core/types.hpp"
#include "rocotex/prompting/regional_prompt.hpp"
#include "rocotex/raster/shading.hpp"

namespace rocotex {

// Backend answered, but not per protocol (e.g. wrong resolution).
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Backend answered with a non-2xx status.
class BackendError : public Error {
 public:
  BackendError(int status, const std::string& what) : Error(what), status_(status) {}
  [[nodiscard]] int status() const { return status_; }

 private:
  int status_;
};

// Connection failure or timeout; safe to retry.
class TransportError : public Error {
 public:
  using Error::Error;
};

struct ControlWeights {
  double depth = 0.5;
  double normal = 0.5;
  double edge = 0.5;
};

struct GenerationRequest {
  ViewImage image;
  MaskImage mask;       // dilated binary inpainting mask
  MaskImage soft_mask;  // per-pixel strength; 0 means keep the input pixel
  ControlMaps control;
  ControlWeights weights;
  RegionalPrompt prompt;
  std::uint64_t seed = 0;
  int steps = 30;
  double guidance = 7.5;

  [[nodiscard]] int width() const { return image.width(); }
  [[nodiscard]] int height() const { return image.height(); }
};

struct GenerationResponse {
  ViewImage image;
  std::string metadata;
};

// Throws ConfigError when rasters disagree in size or weights leave [0, 2].
void validate(const GenerationRequest& request);

class Generator {
 public:
  virtual ~Generator() = default;
  // Pixels whose soft mask is 0 come back unchanged (up to 8-bit
  // quantization for remote backends).
  virtual GenerationResponse generate(const GenerationRequest& request) = 0;
  [[nodiscard]] virtual std::string name() const = 0;
};

}  // namespace rocotex
