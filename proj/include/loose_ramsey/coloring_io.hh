#ifndef LOOSE_RAMSEY_COLORING_IO_HH
#define LOOSE_RAMSEY_COLORING_IO_HH 1

#include <loose_ramsey/hypergraph.hh>

#include <stdexcept>
#include <string>

namespace loose_ramsey
{
    class FormatError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// "LRC1 <N>" then ceil(C(N,3)/4) hex digits; bit i is colex rank i, most
    /// significant bit first within each digit, set means red.
    auto to_lrc1(const Coloring &) -> std::string;

    /// "LRE1 <N>" then one "a b c" line per red triple, in colex order.
    auto to_lre1(const Coloring &) -> std::string;

    /// Accepts either format; whitespace inside the hex body is ignored.
    auto parse_coloring(const std::string &) -> Coloring;

    auto read_coloring_file(const std::string & path) -> Coloring;
    void write_text_file(const std::string & path, const std::string & contents);
}

#endif
