'''
Errors

Every exception the library raises on purpose lives here so callers
(mostly the bench CLI) can tell "you asked for something impossible"
apart from "the structure is broken".

Bad arguments subclass ValueError as well, so plain `except ValueError`
still catches them.
'''
import sys


class WordRamError (Exception):
	pass


class ConfigError (WordRamError, ValueError):
	pass


class OrderingError (WordRamError, ValueError):
	pass


class DuplicateKeyError (WordRamError, KeyError):
	pass


class KeyAbsentError (WordRamError, KeyError):
	pass


class BucketFullError (WordRamError):
	pass


class CapacityExceededError (WordRamError):
	pass


class RebuildRequiredError (WordRamError):
	'''
	The spill dictionary of the perfect hash ran out of slots. Nothing
	was changed; the caller decides whether to rebuild with a new seed.
	'''
	pass


class AuditError (WordRamError):
	'''
	One failed structural check. Audits collect these and raise them
	together in an ExceptionGroup.
	'''
	pass



if __name__ == '__main__':
	print("This file is not meant to be run")
	sys.exit(1)
