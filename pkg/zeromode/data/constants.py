"""
Numerical constants
"""


class Constants:
    """
    Class for numerical tolerances used in the program. Contains:

        real_tolerance: eigenvalues whose imaginary part is below this
                        fraction of the spectral radius are taken as real

        defective_tolerance: bound on |sum_j L_j R_j| below which an
                             eigenvalue is reported as defective

        symmetry_tolerance: accepted relative asymmetry of a metric

        psd_tolerance: accepted relative negative eigenvalue of a metric

        emax_tolerance: real eigenvalues of a candidate below this fraction
                        of its Frobenius norm are taken as zero

        insertion_tolerance: largest accepted ratio between the discarded
                             and the largest singular value of I - Z/E_max

        full_state_limit: largest state vector built by full contractions
    """
    @property
    def real_tolerance(self):
        """
        Relative bound on imaginary parts of real eigenvalues
        """
        return 1e-10

    @property
    def defective_tolerance(self):
        """
        Bound on the left/right eigenvector overlap
        """
        return 1e-10

    @property
    def symmetry_tolerance(self):
        """
        Relative asymmetry accepted before a warning
        """
        return 1e-10

    @property
    def psd_tolerance(self):
        """
        Relative negative eigenvalue accepted before a warning
        """
        return 1e-10

    @property
    def emax_tolerance(self):
        """
        Relative bound below which E_max is unusable
        """
        return 1e-6

    @property
    def insertion_tolerance(self):
        """
        Relative size of the discarded singular value
        """
        return 1e-10

    @property
    def full_state_limit(self):
        """
        Maximum dimension of an exactly contracted state
        """
        return 2**20
