#include "coxcell/cache.hpp"
#include "coxcell/suite.hpp"
#include "coxcell/truncated.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace coxcell;

namespace {

py::dict laurent_dict(const Laurent& p) {
  py::dict d;
  for (const auto& [k, c] : p.terms()) d[py::int_(k)] = py::int_(py::str(c.str()));
  return d;
}

/// One fully built group: Coxeter system, Hecke algebra, cells, gamma
/// table and J-ring, behind a single handle.
class Engine {
public:
  explicit Engine(const std::string& type, long long bound, const std::string& cache_dir)
      : W_(parse_type(type, bound)), H_(W_) {
    build_with_cache(cache_dir, W_, H_);
    cd_ = compute_cells(W_, H_);
    g_ = std::make_unique<GammaTable>(W_, H_, cd_);
    J_ = std::make_unique<JRing>(W_, H_, cd_, *g_);
  }

  std::string type() const { return W_.type_string; }
  int order() const { return W_.size; }
  int rank() const { return W_.rank; }
  int nu() const { return (int)W_.nu; }
  int w_max() const { return W_.w_max; }
  size_t kl_computed() const { return H_.kl_computed(); }

  int element(const std::string& word) const {
    auto id = W_.parse_word(word);
    if (!id) throw CoxcellError("cannot parse element word: " + word);
    return *id;
  }
  std::string word(int w) const {
    W_.check_id(w);
    return W_.word_str(w);
  }
  int length(int w) const {
    W_.check_id(w);
    return (int)W_.length[w];
  }
  int mul(int w, int u) const { return W_.mul(w, u); }
  int inverse(int w) const {
    W_.check_id(w);
    return W_.inverse[w];
  }
  bool bruhat_leq(int y, int w) const {
    W_.check_id(y);
    W_.check_id(w);
    return W_.bruhat_leq(y, w);
  }

  py::dict kl_p(int y, int w) const {
    W_.check_id(y);
    W_.check_id(w);
    return laurent_dict(H_.kl_p(y, w));
  }
  py::dict h(int x, int y, int z) const {
    W_.check_id(x);
    W_.check_id(y);
    W_.check_id(z);
    return laurent_dict(H_.h_const(x, y, z));
  }

  int n_cells() const { return cd_.n_cells(); }
  int cell_of(int w) const {
    W_.check_id(w);
    return cd_.cell_of[w];
  }
  std::vector<int> cell_members(int c) const { return cd_.cells.at(c); }
  std::vector<int> distinguished(int c) const { return cd_.distinguished.at(c); }
  std::vector<int> c0(int c) const { return cd_.c0.at(c); }
  long long a(int z) const {
    W_.check_id(z);
    return g_->a(z);
  }
  long long gamma(int x, int y, int z) const {
    W_.check_id(x);
    W_.check_id(y);
    W_.check_id(z);
    return g_->gamma(x, y, z);
  }

  std::map<int, long long> psi_x(int x) const { return ctx(cell_of(x)).psi_x(x); }
  long long dim_hom(int z, int u) const { return ctx(cell_of(z)).dim_hom(z, u); }
  long long conv_multiplicity(const std::vector<int>& ws, int w) const {
    if (ws.empty()) throw CoxcellError("conv_multiplicity needs at least one factor");
    return ctx(cell_of(ws[0])).conv_multiplicity(ws, w);
  }
  std::map<int, long long> circle(int x, int u) const {
    TruncContext t = ctx(cell_of(x));
    JElement r = t.circle(J_->t(x), J_->t(u));
    return r.terms;
  }
  long long center_dimension(int c) const { return J_->center_dimension(c); }

  py::list verify(uint64_t seed) {
    SuiteOptions opt;
    opt.seed = seed;
    auto reports = run_property_suite(W_, H_, cd_, *g_, opt);
    py::list out;
    for (const auto& r : reports) {
      py::dict d;
      d["group"] = r.group;
      d["check"] = r.check;
      d["status"] = r.pass ? "pass" : "fail";
      d["seed"] = r.seed;
      if (!r.pass) d["counterexample"] = r.counterexample;
      out.append(d);
    }
    return out;
  }

private:
  TruncContext ctx(int cell) const { return TruncContext(*J_, cell); }

  CoxeterSystem W_;
  HeckeAlgebra H_;
  CellDecomposition cd_;
  std::unique_ptr<GammaTable> g_;
  std::unique_ptr<JRing> J_;
};

}  // namespace

PYBIND11_MODULE(coxcell, m) {
  m.doc() = "Exact Kazhdan-Lusztig cells, the asymptotic ring J, and "
            "truncated-convolution multiplicities for finite Coxeter groups";

  py::register_exception<CoxcellError>(m, "CoxcellError");

  py::class_<Engine>(m, "Engine")
      .def(py::init<const std::string&, long long, const std::string&>(), py::arg("type"),
           py::arg("bound") = 20000, py::arg("cache_dir") = "")
      .def_property_readonly("type", &Engine::type)
      .def_property_readonly("order", &Engine::order)
      .def_property_readonly("rank", &Engine::rank)
      .def_property_readonly("nu", &Engine::nu)
      .def_property_readonly("w_max", &Engine::w_max)
      .def_property_readonly("kl_computed", &Engine::kl_computed)
      .def("element", &Engine::element, py::arg("word"))
      .def("word", &Engine::word)
      .def("length", &Engine::length)
      .def("mul", &Engine::mul)
      .def("inverse", &Engine::inverse)
      .def("bruhat_leq", &Engine::bruhat_leq)
      .def("kl_p", &Engine::kl_p, py::arg("y"), py::arg("w"),
           "KL polynomial p_{y,w} as a dict exponent -> coefficient")
      .def("h", &Engine::h, py::arg("x"), py::arg("y"), py::arg("z"),
           "Structure constant h_{x,y,z} as a dict exponent -> coefficient")
      .def("n_cells", &Engine::n_cells)
      .def("cell_of", &Engine::cell_of)
      .def("cell_members", &Engine::cell_members)
      .def("distinguished", &Engine::distinguished)
      .def("c0", &Engine::c0)
      .def("a", &Engine::a)
      .def("gamma", &Engine::gamma)
      .def("psi_x", &Engine::psi_x)
      .def("dim_hom", &Engine::dim_hom)
      .def("conv_multiplicity", &Engine::conv_multiplicity, py::arg("ws"), py::arg("w"))
      .def("circle", &Engine::circle, py::arg("x"), py::arg("u"))
      .def("center_dimension", &Engine::center_dimension)
      .def("verify", &Engine::verify, py::arg("seed") = SuiteOptions{}.seed);
}
