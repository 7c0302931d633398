#pragma once

#include <stdexcept>
#include <string>

namespace pershot {

// Base for all library errors. Specific types exist so callers can
// distinguish recoverable per-item failures from configuration mistakes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define PERSHOT_ERROR(Name)                                          \
    struct Name : Error {                                             \
        explicit Name(const std::string& msg = #Name) : Error(msg) {} \
    }

// media pipeline
PERSHOT_ERROR(EmptyManifest);
PERSHOT_ERROR(InvalidResolution);
PERSHOT_ERROR(EncodeFailed);
PERSHOT_ERROR(ToolNotFound);
PERSHOT_ERROR(FrameMismatch);
PERSHOT_ERROR(QualityToolFailed);
PERSHOT_ERROR(ParseFailed);
PERSHOT_ERROR(ProbeFailed);

// features
PERSHOT_ERROR(EmptyPool);
PERSHOT_ERROR(BlockTooLarge);
PERSHOT_ERROR(NeedTwoFrames);
PERSHOT_ERROR(InvalidBitrate);
PERSHOT_ERROR(MissingBitrate);
PERSHOT_ERROR(TooFewBlocks);

// regression
PERSHOT_ERROR(TooFewSamples);
PERSHOT_ERROR(SchemaMismatch);
PERSHOT_ERROR(NothingToEliminate);
PERSHOT_ERROR(DegenerateInput);
PERSHOT_ERROR(ModelLoadFailed);

// ladder
PERSHOT_ERROR(EmptyHull);
PERSHOT_ERROR(InsufficientPredictions);
PERSHOT_ERROR(EmptyTable);

// evaluation
PERSHOT_ERROR(EmptyCurve);
PERSHOT_ERROR(NoOverlap);
PERSHOT_ERROR(EmptyInput);
PERSHOT_ERROR(TooFewVideos);
PERSHOT_ERROR(NoCommonVideos);

// io / config
PERSHOT_ERROR(ConfigError);
PERSHOT_ERROR(IoError);

#undef PERSHOT_ERROR

}  // namespace pershot
