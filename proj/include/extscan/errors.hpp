#pragma once

#include <stdexcept>
#include <string>

namespace extscan {

enum class Errc {
    NotAZip,
    ManifestMissing,
    ManifestUnparseable,
    PathTraversal,
    FileTooLarge,
    VersionUnparseable,
    RangeUnparseable,
    DbUnparseable,
    DuplicateRecord,
    BackendUnavailable,
    IndicatorInvalid,
    RateLimited,
    AllowlistUnreadable,
    EndpointUnavailable,
    SchemaMismatch,
    NotFound,
    IntegrityMismatch,
    UnknownNode,
    UnknownRuleId,
    PolicyUnparseable,
    IoError,
};

const char* errc_name(Errc code);

// Thrown by parse/load/lookup layers. Pipeline code catches these and
// degrades to per-package outcomes so a hostile input never stops a corpus
// scan.
class ScanError : public std::runtime_error {
  public:
    ScanError(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }

  private:
    Errc code_;
};

} // namespace extscan
