import cProfile
import math
import pstats

from singspec.exc_geometry import spectrum
from singspec.oracles import qh_spectrum
from singspec.resolution import from_newton, from_proximity_document, quasi_homogeneous_proximity

def toric_spectra(limit: int, parallelism=None):
	'''Spectra of x^a + y^b from the Newton fan.'''
	for a in range(2, limit + 1):
		for b in range(a + 1, limit + 1):
			if math.gcd(a, b) == 1:
				assert spectrum(from_newton([(a, 0), (0, b)]), parallelism) == qh_spectrum(a, b)

def blowup_spectra(limit: int, parallelism=None):
	'''The same family, resolved by blowing up points one at a time.'''
	for a in range(2, limit + 1):
		for b in range(a + 1, limit + 1):
			if math.gcd(a, b) == 1:
				res = from_proximity_document(quasi_homogeneous_proximity(a, b))
				assert spectrum(res, parallelism) == qh_spectrum(a, b)

def profile_quasi_homogeneous_family():
	tests = [
		('toric         ', toric_spectra, None),
		('blowup        ', blowup_spectra, None),
		('toric parallel', toric_spectra, 4),
	]

	for test in tests:
		for i in range(3):
			profiler = cProfile.Profile()
			profiler.enable()
			test[1](13, test[2])
			profiler.disable()
			p = pstats.Stats(profiler)
			print(f'{test[0]}: run {i} took {p.total_tt} seconds')

	p.sort_stats(pstats.SortKey.TIME).print_stats(20)


if __name__ == "__main__":
	profile_quasi_homogeneous_family()
