"""
Test cases for caching utilities, the exception hierarchy and the build step summaries
"""

import importlib.util
from pathlib import Path
from unittest.mock import patch

from django.conf import settings
from django.core.cache import cache
from django.test import SimpleTestCase, override_settings

from .cache_utils import cache_function, cache_key_builder, content_fingerprint
from .exceptions import (EnumerationOverflowError, ExplorationOverflowError, FormatParseError,
                         PrecisionError, UnboundedNetError, UnknownCorpusEntryError)


class Fingerprinted:
    def __init__(self, text):
        self.text = text

    def fingerprint(self):
        return content_fingerprint(self.text)


class CacheUtilsTest(SimpleTestCase):
    """Test cache utility functions"""

    def setUp(self):
        cache.clear()

    def test_cache_function_decorator(self):
        """Test function caching decorator"""
        call_count = 0

        @cache_function(timeout=300)
        def expensive_function(x, y):
            nonlocal call_count
            call_count += 1
            return x + y

        # First call should execute function
        self.assertEqual(expensive_function(1, 2), 3)
        self.assertEqual(call_count, 1)

        # Second call should use cache
        self.assertEqual(expensive_function(1, 2), 3)
        self.assertEqual(call_count, 1)

        # Different arguments should execute function again
        self.assertEqual(expensive_function(2, 3), 5)
        self.assertEqual(call_count, 2)

    def test_cache_clear(self):
        """Test clearing one cached call"""
        call_count = 0

        @cache_function(key_prefix='test')
        def square(x):
            nonlocal call_count
            call_count += 1
            return x * x

        square(4)
        square.cache_clear(4)
        square(4)
        self.assertEqual(call_count, 2)

    def test_fingerprint_keys(self):
        """Test that equal content shares a key"""
        first = cache_key_builder(Fingerprinted('place p init=1'))
        second = cache_key_builder(Fingerprinted('place p init=1'))
        other = cache_key_builder(Fingerprinted('place q init=1'))
        self.assertEqual(first, second)
        self.assertNotEqual(first, other)
        self.assertTrue(first.startswith('Fingerprinted_'))

    def test_long_keys_are_hashed(self):
        """Test that keys beyond 200 characters are hashed"""
        key = cache_key_builder('x' * 300)
        self.assertEqual(len(key), 32)

    def test_kwargs_in_key(self):
        """Test keyword arguments contribute in sorted order"""
        self.assertEqual(cache_key_builder(1, b=2, a=1), '1_a_1_b_2')

    @override_settings(CACHES={'default': {'BACKEND': 'django.core.cache.backends.locmem.LocMemCache',
                                           'LOCATION': 'timeout-test', 'TIMEOUT': 42}})
    def test_default_timeout_from_settings(self):
        """Test that the alias timeout applies when none is given"""
        @cache_function(key_prefix='timeout')
        def constant():
            return 'value'

        with patch('precision_core.cache_utils.caches') as caches:
            caches.__getitem__.return_value.get.return_value = None
            constant()
            args = caches.__getitem__.return_value.set.call_args[0]
        self.assertEqual(args[2], 42)

    def test_content_fingerprint(self):
        self.assertEqual(len(content_fingerprint('abc')), 20)
        self.assertEqual(content_fingerprint('abc'), content_fingerprint('abc'))


class ExceptionTest(SimpleTestCase):
    """Test the exception hierarchy"""

    def test_capacity_errors_carry_limits(self):
        self.assertEqual(ExplorationOverflowError(10).state_cap, 10)
        self.assertEqual(EnumerationOverflowError(3).cap, 3)
        error = UnboundedNetError('p1', 8)
        self.assertEqual((error.place, error.bound), ('p1', 8))
        self.assertIn('p1', str(error))

    def test_unknown_corpus_entry_is_key_error(self):
        error = UnknownCorpusEntryError('nonexistent')
        self.assertIsInstance(error, KeyError)
        self.assertIsInstance(error, PrecisionError)
        self.assertEqual(str(error), 'Unknown corpus entry: nonexistent')

    def test_format_parse_error_line(self):
        error = FormatParseError('bad count', 3)
        self.assertEqual(error.lineno, 3)
        self.assertEqual(error.params['lineno'], 3)
        self.assertEqual(str(error), 'Line 3: bad count')


def _load_build_script():
    path = Path(settings.BASE_DIR).parent / 'build.py'
    spec = importlib.util.spec_from_file_location('build_script', path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


class BuildSummaryTest(SimpleTestCase):
    """Test the lines the build script reports per step"""

    def setUp(self):
        self.build = _load_build_script()

    def test_pytest_failure(self):
        output = '\n'.join([
            'measures/tests.py ..F.',
            '=========================== short test summary info ============================',
            'FAILED measures/tests.py::NegativeEventTest::test_flower_on_single_event - AssertionError',
            '===================== 1 failed, 180 passed in 41.20s =====================',
        ])
        self.assertEqual(self.build.summarize(output, failed=True), [
            'FAILED measures/tests.py::NegativeEventTest::test_flower_on_single_event - AssertionError',
            '===================== 1 failed, 180 passed in 41.20s =====================',
        ])

    def test_reproduction_failure(self):
        output = 'pass  etc on fig4: expected 0.75, computed 0.75\nFAIL  pcc on fig7: expected 0.6, computed 0.5\n' \
                 'matrix mismatch: pcc/A2: computed ?, reference ✗\nreproduction FAILED\n'
        self.assertEqual(self.build.summarize(output, failed=True), [
            'FAIL  pcc on fig7: expected 0.6, computed 0.5',
            'matrix mismatch: pcc/A2: computed ?, reference ✗',
            'reproduction FAILED',
        ])

    def test_unrecognised_failure_shows_tail(self):
        output = '\n'.join(f'line {n}' for n in range(40))
        self.assertEqual(self.build.summarize(output, failed=True), [f'line {n}' for n in range(25, 40)])

    def test_success_shows_summary_only(self):
        output = 'collected 181 items\n...\n======= 181 passed in 40.02s =======\n'
        self.assertEqual(self.build.summarize(output, failed=False), ['======= 181 passed in 40.02s ======='])
        self.assertEqual(self.build.summarize('System check identified no issues (0 silenced).\n',
                                              failed=False), [])
