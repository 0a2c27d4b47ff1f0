#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "tracerec/bma.hpp"
#include "tracerec/channel.hpp"
#include "tracerec/delimiter_code.hpp"
#include "tracerec/errors.hpp"
#include "tracerec/experiment.hpp"
#include "tracerec/lambert.hpp"
#include "tracerec/levenshtein.hpp"
#include "tracerec/reconstruct.hpp"
#include "tracerec/trace_code.hpp"

namespace py = pybind11;
using namespace tracerec;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coded trace reconstruction over deletion channels";

    py::register_exception<ParamError>(m, "ParamError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<RllViolation>(m, "RllViolation", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<SamplerExhausted>(m, "SamplerExhausted", PyExc_RuntimeError);

    py::class_<BitString>(m, "BitString")
        .def(py::init<>())
        .def(py::init([](const std::string& text) { return parse_bitstring(text); }))
        .def("__str__", &format_bitstring)
        .def("__repr__",
             [](const BitString& x) { return "BitString('" + format_bitstring(x) + "')"; })
        .def("__len__", &BitString::size)
        .def("__getitem__",
             [](const BitString& x, std::size_t i) {
                 if (i >= x.size()) throw py::index_error();
                 return static_cast<int>(x[i]);
             })
        .def("__eq__", [](const BitString& a, const BitString& b) { return a == b; },
             py::is_operator());
    py::implicitly_convertible<py::str, BitString>();

    m.def("parse_bitstring", [](const std::string& s) { return parse_bitstring(s); });
    m.def("format_bitstring", &format_bitstring);
    m.def("max_run_length", &max_run_length);
    m.def("levenshtein", &levenshtein);

    py::class_<CodeParams>(m, "CodeParams")
        .def_readonly("n", &CodeParams::n)
        .def_readonly("k", &CodeParams::k)
        .def_readonly("alpha", &CodeParams::alpha)
        .def_readonly("delta", &CodeParams::delta)
        .def_readonly("p", &CodeParams::p)
        .def_readonly("ell", &CodeParams::ell)
        .def_readonly("detect_cap", &CodeParams::detect_cap)
        .def_readonly("num_blocks", &CodeParams::num_blocks)
        .def_readonly("last_block_len", &CodeParams::last_block_len)
        .def("__repr__", [](const CodeParams& cp) {
            std::ostringstream os;
            os << "CodeParams(n=" << cp.n << ", k=" << cp.k << ", alpha=" << cp.alpha
               << ", delta=" << cp.delta << ", ell=" << cp.ell
               << ", num_blocks=" << cp.num_blocks << ")";
            return os.str();
        });
    m.def("derive_params", &derive_params, py::arg("n"), py::arg("k"), py::arg("alpha"),
          py::arg("delta"));
    m.def("claim1_bounds_hold", &claim1_bounds_hold);

    py::class_<DelimiterParams>(m, "DelimiterParams")
        .def_readonly("n", &DelimiterParams::n)
        .def_readonly("ell", &DelimiterParams::ell)
        .def_readonly("detect_cap", &DelimiterParams::detect_cap)
        .def_readonly("num_blocks", &DelimiterParams::num_blocks)
        .def_readonly("last_block_len", &DelimiterParams::last_block_len);
    m.def("make_delimiter_params", &make_delimiter_params, py::arg("n"), py::arg("ell"),
          py::arg("detect_cap"));
    m.def("delimiter_view", &delimiter_view);

    py::class_<FixedBit>(m, "FixedBit")
        .def_readonly("pos", &FixedBit::pos)
        .def_readonly("value", &FixedBit::value);
    py::class_<DelimiterLayout>(m, "DelimiterLayout")
        .def_readonly("fixed", &DelimiterLayout::fixed);
    m.def("delimiter_layout",
          py::overload_cast<const DelimiterParams&>(&delimiter_layout));
    m.def("delimiter_layout", py::overload_cast<const CodeParams&>(&delimiter_layout));

    m.def("stamp_delimiters",
          py::overload_cast<const BitString&, const CodeParams&>(&stamp_delimiters));
    m.def("stamp_delimiters",
          py::overload_cast<const BitString&, const DelimiterParams&>(&stamp_delimiters));
    m.def("is_delimiter_codeword",
          py::overload_cast<const BitString&, const CodeParams&>(&is_delimiter_codeword));
    m.def("is_delimiter_codeword",
          py::overload_cast<const BitString&, const DelimiterParams&>(&is_delimiter_codeword));

    py::class_<SegmentInfo>(m, "SegmentInfo")
        .def_readonly("offset", &SegmentInfo::offset)
        .def_readonly("length", &SegmentInfo::length)
        .def_readonly("deletions", &SegmentInfo::deletions);
    py::class_<Segmentation>(m, "Segmentation")
        .def_readonly("segments", &Segmentation::segments)
        .def_readonly("failed_block", &Segmentation::failed_block)
        .def("ok", &Segmentation::ok);
    m.def("segment_trace",
          py::overload_cast<const Trace&, const CodeParams&>(&segment_trace));
    m.def("segment_trace",
          py::overload_cast<const Trace&, const DelimiterParams&>(&segment_trace));

    m.def("max_run_bound", &max_run_bound);
    m.def("is_codeword", &is_codeword);
    m.def("info_length", &info_length);
    m.def("encode_systematic", &encode_systematic);
    m.def("extract_info", &extract_info);
    m.def("delimiter_redundancy", &delimiter_redundancy);
    m.def("code_rate", &code_rate);
    m.def("log2_rll_count", &log2_rll_count);

    m.def("lambert_w0", &lambert_w0);
    m.def("delta_star", &delta_star, py::arg("n"), py::arg("alpha"), py::arg("p_target"));
    m.def("select_delta", &select_delta, py::arg("n"), py::arg("alpha"), py::arg("p_target"));

    py::class_<RandomStream>(m, "RandomStream")
        .def(py::init<std::uint64_t>(), py::arg("seed"))
        .def("next_u64", &RandomStream::next_u64)
        .def("next_unit", &RandomStream::next_unit)
        .def("next_bit", &RandomStream::next_bit)
        .def("substream", &RandomStream::substream);

    py::class_<Trace>(m, "Trace")
        .def(py::init([](const BitString& bits, std::size_t origin_len) {
                 return Trace{bits, origin_len};
             }),
             py::arg("bits"), py::arg("origin_len"))
        .def_readonly("bits", &Trace::bits)
        .def_readonly("origin_len", &Trace::origin_len);

    m.def("sample_codeword", &sample_codeword, py::arg("params"), py::arg("rng"),
          py::arg("retry_limit") = kDefaultRetryLimit);
    m.def("sample_rll_sequence", &sample_rll_sequence, py::arg("n"), py::arg("max_run"),
          py::arg("rng"), py::arg("retry_limit") = kDefaultRetryLimit);

    m.def("transmit", &transmit, py::arg("x"), py::arg("p"), py::arg("rng"));
    m.def(
        "generate_traces",
        [](const BitString& x, double p, std::size_t t, const RandomStream& rng) {
            return generate_traces(x, ChannelSpec{p, t}, rng);
        },
        py::arg("x"), py::arg("p"), py::arg("t"), py::arg("rng"));

    m.def(
        "bma",
        [](const std::vector<BitString>& rows, std::size_t width) {
            return bma(BlockMatrix{width, rows});
        },
        py::arg("rows"), py::arg("width"));

    m.def(
        "reconstruct_blockwise",
        [](const std::vector<Trace>& traces, const CodeParams& params) {
            ReconstructStats stats;
            BitString xhat = reconstruct_blockwise(traces, params, &stats);
            return py::make_tuple(xhat, stats.failed_traces);
        },
        py::arg("traces"), py::arg("params"),
        "Returns (reconstruction, number of traces whose segmentation failed).");
    m.def("reconstruct_bma", &reconstruct_bma, py::arg("traces"), py::arg("n"));

    m.def(
        "run_experiment_csv",
        [](const std::string& config_text, unsigned threads) {
            const ExperimentConfig cfg = parse_config_text(config_text);
            return to_csv(run_experiment(cfg, threads));
        },
        py::arg("config_text"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Parses a key=value experiment config and returns the result CSV.");
}
