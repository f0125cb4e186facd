"""Module containing lattice_spectra logging utilities
"""

# Created:   18-Oct-2026

import os
import sys
import logging
import inspect


LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s | %(message)s'


def _enable_logging(logger, replace_log_file=True, filename='lattice_spectra_log.txt', logging_level=logging.DEBUG):
    """Function that creates basic logging configuration for selected logger

    Parameters
    ----------
    logger : SpectraLogger
        Package logger object
    replace_log_file : bool
        Remove an existing log file before logging starts
    filename : os.Pathlike
        File path for output logfile
    logging_level : logging.LEVEL, optional
        Level of messages to display, by default logging.DEBUG

    Raises
    ------
    PermissionError
        The log directory is not writable.
    TypeError
        Only the custom SpectraLogger can be used here.
    """

    abs_path = os.path.abspath(filename)
    if replace_log_file and os.path.exists(abs_path):
        os.remove(abs_path)

    if not os.access(os.path.dirname(abs_path), os.W_OK):
        raise PermissionError('You do not have permission to create {}.'.format(filename))

    if not isinstance(logger, SpectraLogger):
        raise TypeError('Only the SpectraLogger can be used for logging in the lattice_spectra module.')

    log_file    = logging.FileHandler(abs_path)
    formatter   = logging.Formatter(LOG_FORMAT)
    log_file.setFormatter(formatter)
    logger.addHandler(log_file)
    logger.setLevel(logging_level)
    return log_file


def _initialize_logger(name='lattice_spectra', custom_logger=True):
    """Function that retrieves an instance of either the default or custom logger.

    Parameters
    ----------
    name : str, optional
        The name of the logger, by default the package logger
    custom_logger : bool, optional
        Use a SpectraLogger, by default True

    Returns
    -------
    logger : lattice_spectra.debug.SpectraLogger
        A logger that tags messages with their call site
    """

    if not custom_logger:
        return logging.getLogger(name)

    original_class = logging.getLoggerClass()
    logging.setLoggerClass(SpectraLogger)
    try:
        return logging.getLogger(name)
    finally:
        logging.setLoggerClass(original_class)


class SpectraLogger(logging.Logger):
    """Custom logger class for lattice_spectra, extends the base logging.Logger Class

    Attributes
    ----------
    _live_debug_level : int
        Lowest level echoed to the console while live debugging
    _live_debug_handler : logging.Handler
        The stderr handler, present only while live debugging is enabled
    """

    def __init__(self, name):
        """Initializer for the SpectraLogger helper class
        """

        super(SpectraLogger, self).__init__(name)
        self._live_debug_level      = logging.ERROR
        self._live_debug_handler    = None


    def _get_debug_text(self, text):
        """Function that generates full debug text for the log
        """

        func = inspect.currentframe().f_back.f_back.f_code
        return "{}: Function {} in {}:{}".format(text, func.co_name, os.path.basename(func.co_filename), func.co_firstlineno)


    def debug(self, text, *args, **kwargs):
        super().debug(self._get_debug_text(text), *args, **kwargs)


    def info(self, text, *args, **kwargs):
        """Adds stacktrace info to log

        Parameters
        ----------
        text : str
            The log text to display
        """

        super().info(self._get_debug_text(text), *args, **kwargs)


    def warning(self, text, *args, **kwargs):
        super().warning(self._get_debug_text(text), *args, **kwargs)


    def error(self, text, *args, **kwargs):
        super().error(self._get_debug_text(text), *args, **kwargs)


    def is_live_debugging(self):
        return self._live_debug_handler is not None


    def toggle_live_debug(self, level=logging.ERROR, stream=None):
        """Toggles live debugging mode, echoing messages at or above level to stderr

        Parameters
        ----------
        level : int
            Lowest level to echo while enabled
        stream : file-like, optional
            Alternative output stream, used by tests
        """

        if self._live_debug_handler is not None:
            self.removeHandler(self._live_debug_handler)
            self._live_debug_handler = None
            return

        self._live_debug_level = level
        handler = logging.StreamHandler(sys.stderr if stream is None else stream)
        handler.setLevel(level)
        handler.setFormatter(logging.Formatter('%(levelname)s | %(message)s'))
        self.addHandler(handler)
        if self.getEffectiveLevel() > level:
            self.setLevel(level)
        self._live_debug_handler = handler
