// One steerable layer on UT3(F3): a random feature map with fiber
// rho(0,0) + rho1 goes through a Schur-block filter into 2 rho(0,0) + rho1,
// then through a norm nonlinearity. Prints the equivariance defect of each stage.
#include <iostream>

#include "ut3/ut3.hpp"

int main() {
  using namespace ut3;
  Rng rng(7);
  RepType::Multiplicities in{}, out{};
  in[0] = 1, in[9] = 1;
  out[0] = 2, out[9] = 1;
  const RepType in_type(in), out_type(out);

  const FeatureMap f = FeatureMap::random(in_type, rng);
  const EquivariantFilter filter = random_filter(in_type, out_type, rng);
  std::cout << "free parameters: " << filter.parameter_count() << "\n";

  const FeatureMap hidden = steerable_convolve(f, filter);
  const FeatureMap activated = norm_nonlinearity(hidden, shifted_relu(0.5));

  double conv_defect = equivariance_residual(f, filter);
  double layer_defect = 0.0;
  for (GroupElement u : elements()) {
    const FeatureMap moved = norm_nonlinearity(steerable_convolve(induced_action(u, f), filter), shifted_relu(0.5));
    layer_defect = std::max(layer_defect, distance(moved, induced_action(u, activated)));
  }
  std::cout << "convolution equivariance defect: " << conv_defect << "\n"
            << "layer equivariance defect:       " << layer_defect << "\n";
}
