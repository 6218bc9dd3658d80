from abc import ABC, abstractmethod


class ReportViewInterface(ABC):
    """Interface for command output"""

    @abstractmethod
    def show_report(self, report, out=None):
        """Emit a run report to out, or to the console"""
        pass

    @abstractmethod
    def write_structure(self, structure, path):
        """Write a structure file"""
        pass

    @abstractmethod
    def write_dot(self, text, path):
        """Write a DOT digraph"""
        pass

    @abstractmethod
    def show_error(self, message):
        """Report a failed command"""
        pass
