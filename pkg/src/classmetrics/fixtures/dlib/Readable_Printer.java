package dlib;

public class Readable_Printer extends BaseObject implements Print_Readable
{
    private StringBuffer out;

    public Readable_Printer ()
    {
        out = new StringBuffer();
    }

    public void printOn (Object sink)
    {
        out.append(sink);
    }

    public String contents ()
    {
        return( out.toString() );
    }
}
