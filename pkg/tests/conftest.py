import os

from hypothesis import HealthCheck, settings, strategies as st

from plspheres.constructions import (
    cross_polytope_boundary,
    random_subdivided_sphere,
    simplex_boundary,
)

settings.register_profile(
    "default", max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=200, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def subdivided_spheres(draw, dims=(1, 2, 3), max_steps=4):
    d = draw(st.sampled_from(dims))
    base = draw(st.sampled_from([simplex_boundary(d + 1), cross_polytope_boundary(d + 1)]))
    steps = draw(st.integers(0, max_steps))
    seed = draw(st.integers(0, 10**6))
    edges = draw(st.booleans())
    return random_subdivided_sphere(base, steps, seed, edges=edges)


@st.composite
def stacked_spheres(draw, dims=(1, 2, 3), max_steps=4):
    d = draw(st.sampled_from(dims))
    steps = draw(st.integers(0, max_steps))
    seed = draw(st.integers(0, 10**6))
    return random_subdivided_sphere(simplex_boundary(d + 1), steps, seed, edges=False)
