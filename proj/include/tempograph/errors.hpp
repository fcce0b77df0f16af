#ifndef TEMPOGRAPH_ERRORS_HPP
#define TEMPOGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tempograph {

enum class Errc {
    SelfLoop,
    UnknownVertex,
    EmptyLabelSet,
    NonpositiveLabel,
    ModeUnsupported,
    NotUndirected,
    NotDirected,
    NotConnected,
    SizeBoundExceeded,
    EmbeddingNotInjective,
    EmbeddingOutOfRange,
    UnknownFixture,
    FixtureTooLarge,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace tempograph

#endif
