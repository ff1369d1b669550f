/*
 * Copyright 2026 The vfbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "vfbench/frame.hpp"

namespace vfb {

// Non-learned baselines. Outputs take format, fps and scene id from `a` and
// carry the fused role.

/// Per-pixel, per-channel maximum.
VideoSequence fuse_max(const VideoSequence& a, const VideoSequence& b);

/// Per-pixel average (a + b) * 0.5.
VideoSequence fuse_mean(const VideoSequence& a, const VideoSequence& b);

/// Temporal moving average over an odd window centered on each frame; frame
/// indices beyond either end are clamped to the first or last frame.
VideoSequence temporal_smooth(const VideoSequence& seq, int window);

}  // namespace vfb
