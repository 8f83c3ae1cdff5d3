package dlib;

public class G
{
    public static int gcd (int a, int b)
    {
        while (b != 0)
        {
            int t = a % b;
            a = b;
            b = t;
        }
        return( a );
    }
}
