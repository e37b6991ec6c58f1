#pragma once
// Text formats: complexes (with optional labeling), geometric forms
// (complex format plus lambda lines), and presentation files.  Writers
// normalize field order so that write(parse(write(x))) is byte-identical
// to write(x).

#include "grouplab/complex2.hpp"
#include "grouplab/forms.hpp"
#include "grouplab/labeling.hpp"
#include "grouplab/sampler.hpp"

#include <optional>
#include <string>

namespace grouplab {

std::string read_file(const std::string& path);               // IOError on failure
void write_file(const std::string& path, const std::string&); // IOError on failure

// Header `complex v=<n> e=<n> f=<n>`, then `edge <id> <from> <to>` lines,
// `face <id> : <signed edge ids>` lines, optional `label <faceid> <+-i>`
// lines, optional `lambda <edgeid> <p>/<q>` lines.  Blank lines and lines
// starting with '#' are ignored on input.
std::string render_complex(const Complex2& c, const AbstractLabeling* lab = nullptr);
std::string render_form(const GeometricForm& f, const AbstractLabeling* lab = nullptr);

struct ParsedComplex {
    Complex2 complex;
    std::optional<AbstractLabeling> labeling; // present iff label lines appeared
    std::optional<GeometricForm> form;        // present iff lambda lines appeared
};

// Throws ParseError on malformed or structurally invalid input.
ParsedComplex parse_complex(const std::string& text);

// Header `presentation m=<m> ell=<ell> model=<...> d=<p/q> seed=<u64>`,
// then one relator per line.  Relators must be nonempty, cyclically reduced,
// distinct, of length <= ell; with reduce_input they are cyclically reduced
// first and then held to the same rules.
std::string render_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text, bool reduce_input = false);

// A --form argument: `builtin:name(params)` or a path to a form file.
GeometricForm load_form(const std::string& spec);

} // namespace grouplab
