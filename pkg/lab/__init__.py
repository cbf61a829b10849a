from lab.errors import InvalidGeneratorConfig, TooLarge, UnknownSuite
from lab.generators import GeneratorConfig, gen_model, gen_space, gen_subset, random_space, random_subset
from lab.suites import SUITES, Failure, SuiteReport, run_suite
